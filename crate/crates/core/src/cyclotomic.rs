//! Exact arithmetic in `Z[ζ_n]`, on the power basis `1, ζ, ..., ζ^{φ(n)-1}`.

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] -= c * bi;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

#[derive(Clone, Debug)]
pub struct CycRing {
    n: u64,
    phi: Vec<i64>,
}

/// An element of `Z[ζ_n]` in reduced power-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc(Vec<i64>);

impl CycRing {
    pub fn new(n: u64) -> Self {
        CycRing {
            n,
            phi: cyclotomic_poly(n),
        }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut p: Vec<i64>) -> Cyc {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            let c = p[k];
            if c != 0 {
                for (i, &f) in self.phi.iter().enumerate() {
                    p[k - d + i] -= c * f;
                }
            }
        }
        p.resize(d, 0);
        Cyc(p)
    }

    pub fn zero(&self) -> Cyc {
        Cyc(vec![0; self.degree()])
    }

    pub fn int(&self, k: i64) -> Cyc {
        let mut v = vec![0; self.degree()];
        v[0] = k;
        Cyc(v)
    }

    /// `ζ_n^k`.
    pub fn root(&self, k: i64) -> Cyc {
        let e = k.rem_euclid(self.n as i64) as usize;
        let mut p = vec![0i64; e.max(self.degree()) + 1];
        p[e] = 1;
        self.reduce(p)
    }

    pub fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, a: &Cyc, k: i64) -> Cyc {
        Cyc(a.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        let d = self.degree();
        let mut p = vec![0i64; 2 * d];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        self.reduce(p)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, a: &Cyc) -> Cyc {
        let mut acc = self.zero();
        for (i, &x) in a.0.iter().enumerate() {
            if x != 0 {
                acc = self.add(&acc, &self.scale(&self.root(-(i as i64)), x));
            }
        }
        acc
    }

    /// `a / k`, when every coordinate is divisible by `k`.
    pub fn div_int(&self, a: &Cyc, k: i64) -> Option<Cyc> {
        a.0.iter()
            .all(|x| x % k == 0)
            .then(|| Cyc(a.0.iter().map(|x| x / k).collect()))
    }

    pub fn as_int(&self, a: &Cyc) -> Option<i64> {
        a.0[1..].iter().all(|&x| x == 0).then_some(a.0[0])
    }

    pub fn is_zero(&self, a: &Cyc) -> bool {
        a.0.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sums_of_roots() {
        for n in [1u64, 2, 3, 4, 6, 8, 12, 15] {
            let r = CycRing::new(n);
            let mut s = r.zero();
            for k in 0..n as i64 {
                s = r.add(&s, &r.root(k));
            }
            if n == 1 {
                assert_eq!(r.as_int(&s), Some(1));
            } else {
                assert!(r.is_zero(&s));
            }
            for a in 0..n as i64 {
                let x = r.root(a);
                assert_eq!(r.mul(&x, &r.conj(&x)), r.int(1));
                for b in 0..n as i64 {
                    assert_eq!(r.mul(&x, &r.root(b)), r.root(a + b));
                }
            }
        }
    }
}
