//! Smith and Hermite normal forms of small integer matrices.

pub type IMat = Vec<Vec<i128>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &IMat, v: &[i128]) -> Vec<i128> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<i128>,
    pub u: IMat,
    pub v: IMat,
    pub v_inv: IMat,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|&&d| d != 0).count()
    }
}

pub fn smith(a: &IMat, cols: usize) -> Smith {
    let m = a.len();
    let n = cols;
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut vi = identity(n);

    let swap_cols = |d: &mut IMat, v: &mut IMat, vi: &mut IMat, a: usize, b: usize| {
        if a == b {
            return;
        }
        for row in d.iter_mut().chain(v.iter_mut()) {
            row.swap(a, b);
        }
        vi.swap(a, b);
    };
    // col_b += k col_a
    let add_col = |d: &mut IMat, v: &mut IMat, vi: &mut IMat, a: usize, b: usize, k: i128| {
        for row in d.iter_mut().chain(v.iter_mut()) {
            row[b] += k * row[a];
        }
        let rb = vi[b].clone();
        for (x, y) in vi[a].iter_mut().zip(rb) {
            *x -= k * y;
        }
    };
    // row_b += k row_a
    let add_row = |d: &mut IMat, u: &mut IMat, a: usize, b: usize, k: i128| {
        let ra = d[a].clone();
        for (x, y) in d[b].iter_mut().zip(ra) {
            *x += k * y;
        }
        let ua = u[a].clone();
        for (x, y) in u[b].iter_mut().zip(ua) {
            *x += k * y;
        }
    };

    for t in 0..m.min(n) {
        loop {
            // pivot: least nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, &mut v, &mut vi, t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    add_row(&mut d, &mut u, t, i, -q);
                    if d[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    add_col(&mut d, &mut v, &mut vi, t, j, -q);
                    if d[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block
            let piv = d[t][t];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % piv != 0));
            match bad {
                Some(i) => add_row(&mut d, &mut u, i, t, 1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -*x;
            }
        }
    }
    let diag = (0..m.min(n)).map(|i| d[i][i]).collect();
    Smith {
        diag,
        u,
        v,
        v_inv: vi,
        rows: m,
        cols: n,
    }
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IMat, cols: usize, b: &[i128]) -> Option<Vec<i128>> {
    let s = smith(a, cols);
    let ub = mat_vec(&s.u, b);
    let mut y = vec![0i128; cols];
    for (i, &c) in ub.iter().enumerate() {
        let d = s.diag.get(i).copied().unwrap_or(0);
        if d == 0 {
            if c != 0 {
                return None;
            }
        } else {
            if c % d != 0 {
                return None;
            }
            y[i] = c / d;
        }
    }
    Some(mat_vec(&s.v, &y))
}

/// A basis of the integer kernel `{x : A x = 0}`.
pub fn integer_kernel(a: &IMat, cols: usize) -> IMat {
    let s = smith(a, cols);
    let r = s.rank();
    (r..cols)
        .map(|k| (0..cols).map(|i| s.v[i][k]).collect())
        .collect()
}

/// Row-style Hermite normal form of the lattice spanned by `gens`: echelon
/// rows with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hnf(gens: &IMat, cols: usize) -> IMat {
    let mut rows: IMat = gens
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut out: IMat = Vec::new();
    for c in 0..cols {
        let mut with: Vec<Vec<i128>> = Vec::new();
        let mut without: Vec<Vec<i128>> = Vec::new();
        for r in rows.drain(..) {
            if r[c] != 0 {
                with.push(r);
            } else {
                without.push(r);
            }
        }
        // gcd-combine all rows with a nonzero entry in column c
        while with.len() > 1 {
            with.sort_by_key(|r| r[c].abs());
            let head = with[0].clone();
            let mut next = vec![head.clone()];
            for r in with.drain(1..) {
                let q = r[c].div_euclid(head[c]);
                let red: Vec<i128> = r.iter().zip(&head).map(|(x, y)| x - q * y).collect();
                if red[c] != 0 {
                    next.push(red);
                } else if red.iter().any(|&x| x != 0) {
                    without.push(red);
                }
            }
            with = next;
        }
        rows = without;
        if let Some(mut piv) = with.pop() {
            if piv[c] < 0 {
                piv.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(piv);
        }
    }
    // reduce above pivots
    for k in 0..out.len() {
        let c = out[k].iter().position(|&x| x != 0).unwrap();
        let piv = out[k].clone();
        for row in out.iter_mut().take(k) {
            let q = row[c].div_euclid(piv[c]);
            if q != 0 {
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x -= q * y;
                }
            }
        }
    }
    out
}
