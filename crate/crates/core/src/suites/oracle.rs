//! Plain-integer reference computations, independent of [`crate::Matrix`].

/// Cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0] as i128,
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] as i128 * det_cofactor(&minor)
            })
            .sum(),
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k x k` minors (`0` when every minor vanishes).
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
            g = gcd(g, det_cofactor(&sub));
        }
    }
    g
}

/// Whether `v` is an integer combination of `basis`, which must be in row
/// echelon form (strictly increasing pivots). `None` if it is not echelon.
pub fn in_integer_span(basis: &[Vec<i64>], v: &[i64]) -> Option<bool> {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut last: Option<usize> = None;
    for b in basis {
        let p = b.iter().position(|&x| x != 0)?;
        if last.is_some_and(|l| p <= l) {
            return None;
        }
        last = Some(p);
        let piv = b[p] as i128;
        if rest[p] % piv != 0 {
            return Some(false);
        }
        let x = rest[p] / piv;
        for (r, &bj) in rest.iter_mut().zip(b) {
            *r -= x * bj as i128;
        }
    }
    Some(rest.iter().all(|&r| r == 0))
}

/// Every vector of length `dim` with entries in `[-bound, bound]`.
pub fn box_vectors(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
