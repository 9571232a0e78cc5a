//! Small permutations stored as image lists.

pub(crate) type Perm = Vec<u8>;

/// All permutations of `0..n`, in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, rest: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n as u8).collect(), &mut out);
    out
}

pub(crate) fn inverse(p: &[u8]) -> Perm {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x as usize] = i as u8;
    }
    q
}

/// Sorted cycle lengths, fixed points included.
pub(crate) fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut t = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        if len > 0 {
            t.push(len);
        }
    }
    t.sort_unstable();
    t
}

/// Cycle notation on `1..=n`, `()` for the identity.
pub(crate) fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        s += &format!("({})", cycle.join(" "));
    }
    if s.is_empty() {
        s.push_str("()");
    }
    s
}
