//! Finite abelian groups `Z/d_1 × ... × Z/d_s`, their characters and
//! subgroups.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::scalar::RootScalar;
use crate::snf::{hnf, integer_kernel, smith, solve_integer, IMat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbElement(pub Vec<u64>);

/// A linear character, stored by its exponent vector: `χ(a_j) = ζ_{d_j}^{c_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbCharacter(pub Vec<u64>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(orders: Vec<u64>) -> Self {
        assert!(
            orders.iter().all(|&d| d >= 1),
            "cyclic factor orders must be positive"
        );
        FinAbGroup { orders }
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &d| lcm(a, d))
    }

    pub fn zero(&self) -> AbElement {
        AbElement(vec![0; self.rank()])
    }

    pub fn generator(&self, j: usize) -> AbElement {
        let mut v = vec![0; self.rank()];
        v[j] = 1 % self.orders[j];
        AbElement(v)
    }

    pub fn reduce(&self, v: &[i128]) -> AbElement {
        AbElement(
            v.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
                .collect(),
        )
    }

    pub fn add(&self, a: &AbElement, b: &AbElement) -> AbElement {
        AbElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &AbElement) -> AbElement {
        AbElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(x, d)| (d - x) % d)
                .collect(),
        )
    }

    pub fn sub(&self, a: &AbElement, b: &AbElement) -> AbElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &AbElement, k: i64) -> AbElement {
        AbElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(&x, &d)| (x as i128 * k as i128).rem_euclid(d as i128) as u64)
                .collect(),
        )
    }

    pub fn is_zero(&self, a: &AbElement) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn element_order(&self, a: &AbElement) -> u64 {
        a.0.iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &d)| lcm(acc, d / gcd(x, d)))
    }

    /// Position in the lexicographic enumeration (first coordinate most
    /// significant).
    pub fn index(&self, a: &AbElement) -> usize {
        a.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn element(&self, mut idx: usize) -> AbElement {
        let mut v = vec![0; self.rank()];
        for j in (0..self.rank()).rev() {
            let d = self.orders[j] as usize;
            v[j] = (idx % d) as u64;
            idx /= d;
        }
        AbElement(v)
    }

    pub fn elements(&self) -> impl Iterator<Item = AbElement> + '_ {
        (0..self.order() as usize).map(|i| self.element(i))
    }

    pub fn character(&self, c: Vec<u64>) -> AbCharacter {
        AbCharacter(c.iter().zip(&self.orders).map(|(x, d)| x % d).collect())
    }

    pub fn trivial_character(&self) -> AbCharacter {
        AbCharacter(vec![0; self.rank()])
    }

    /// `χ(x) = ζ_N^{Σ c_j x_j N/d_j}` with `N` the exponent.
    pub fn eval(&self, chi: &AbCharacter, x: &AbElement) -> RootScalar {
        let n = self.exponent();
        let e = chi
            .0
            .iter()
            .zip(&x.0)
            .zip(&self.orders)
            .fold(0u128, |acc, ((&c, &x), &d)| {
                (acc + c as u128 * x as u128 * (n / d) as u128) % n as u128
            });
        RootScalar::new(n, e as i64)
    }

    pub fn char_mul(&self, a: &AbCharacter, b: &AbCharacter) -> AbCharacter {
        AbCharacter(self.add(&AbElement(a.0.clone()), &AbElement(b.0.clone())).0)
    }

    pub fn char_inv(&self, a: &AbCharacter) -> AbCharacter {
        AbCharacter(self.neg(&AbElement(a.0.clone())).0)
    }

    pub fn char_pow(&self, a: &AbCharacter, k: i64) -> AbCharacter {
        AbCharacter(self.scale(&AbElement(a.0.clone()), k).0)
    }

    pub fn dual_group(&self) -> Vec<AbCharacter> {
        self.elements().map(|x| AbCharacter(x.0)).collect()
    }

    /// `Λ²` of the group: one cyclic factor `gcd(d_j, d_l)` per pair `j < l`,
    /// together with the pair labels.
    pub fn exterior_square(&self) -> (FinAbGroup, Vec<(usize, usize)>) {
        let mut orders = Vec::new();
        let mut labels = Vec::new();
        for j in 0..self.rank() {
            for l in j + 1..self.rank() {
                orders.push(gcd(self.orders[j], self.orders[l]));
                labels.push((j, l));
            }
        }
        (FinAbGroup::new(orders), labels)
    }

    /// Kernel of `x ↦ A x`, where row `k` of `A` lands in `Z/targets[k]`.
    pub fn kernel_of(&self, a: &[Vec<i64>], targets: &[u64]) -> Subgroup {
        let s = self.rank();
        let k = a.len();
        let mut m: IMat = Vec::with_capacity(k);
        for (row, &t) in a.iter().zip(targets) {
            let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            r.extend((0..k).map(|_| 0));
            m.push(r);
            let last = m.len() - 1;
            m[last][s + last] = t as i128;
        }
        let gens: Vec<AbElement> = if k == 0 {
            (0..s).map(|j| self.generator(j)).collect()
        } else {
            integer_kernel(&m, s + k)
                .iter()
                .map(|v| self.reduce(&v[..s]))
                .collect()
        };
        Subgroup::generated(self, &gens)
    }
}

/// A subgroup of a [`FinAbGroup`] with an invariant-factor basis: the
/// subgroup is the internal direct sum of the cyclic groups `<basis[k]>`,
/// of orders `orders[k]`, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subgroup {
    pub basis: Vec<AbElement>,
    pub orders: Vec<u64>,
}

impl Subgroup {
    pub fn generated(g: &FinAbGroup, gens: &[AbElement]) -> Subgroup {
        let s = g.rank();
        if s == 0 {
            return Subgroup {
                basis: vec![],
                orders: vec![],
            };
        }
        let mut rows: IMat = gens
            .iter()
            .map(|x| x.0.iter().map(|&v| v as i128).collect())
            .collect();
        for j in 0..s {
            let mut r = vec![0i128; s];
            r[j] = g.orders()[j] as i128;
            rows.push(r);
        }
        let b = hnf(&rows, s);
        debug_assert_eq!(b.len(), s);
        // relations d_j e_j written in the basis b
        let bt: IMat = (0..s).map(|i| (0..s).map(|j| b[j][i]).collect()).collect();
        let rel: IMat = (0..s)
            .map(|j| {
                let mut target = vec![0i128; s];
                target[j] = g.orders()[j] as i128;
                solve_integer(&bt, s, &target).expect("lattice contains the relations")
            })
            .collect();
        let sm = smith(&rel, s);
        let mut basis = Vec::new();
        let mut orders = Vec::new();
        for k in 0..s {
            let d = sm.diag[k];
            if d == 1 {
                continue;
            }
            // e_k V^{-1} B
            let coeff = &sm.v_inv[k];
            let mut v = vec![0i128; s];
            for (t, &c) in coeff.iter().enumerate() {
                for (x, &y) in v.iter_mut().zip(&b[t]) {
                    *x += c * y;
                }
            }
            basis.push(g.reduce(&v));
            orders.push(d as u64);
        }
        Subgroup { basis, orders }
    }

    pub fn whole(g: &FinAbGroup) -> Subgroup {
        let gens: Vec<AbElement> = (0..g.rank()).map(|j| g.generator(j)).collect();
        Subgroup::generated(g, &gens)
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// The abstract group `⊕ Z/orders[k]`.
    pub fn abstract_group(&self) -> FinAbGroup {
        FinAbGroup::new(self.orders.clone())
    }

    pub fn embed(&self, g: &FinAbGroup, c: &AbElement) -> AbElement {
        let mut acc = g.zero();
        for (b, &k) in self.basis.iter().zip(&c.0) {
            acc = g.add(&acc, &g.scale(b, k as i64));
        }
        acc
    }

    /// Coordinates of `x` in the basis, if `x` lies in the subgroup.
    pub fn coords(&self, g: &FinAbGroup, x: &AbElement) -> Option<AbElement> {
        let s = g.rank();
        let k = self.basis.len();
        let m: IMat = (0..s)
            .map(|i| {
                let mut r: Vec<i128> = self.basis.iter().map(|b| b.0[i] as i128).collect();
                r.extend((0..s).map(|j| if i == j { g.orders()[i] as i128 } else { 0 }));
                r
            })
            .collect();
        let rhs: Vec<i128> = x.0.iter().map(|&v| v as i128).collect();
        let sol = solve_integer(&m, k + s, &rhs)?;
        Some(AbElement(
            sol[..k]
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| c.rem_euclid(d as i128) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &FinAbGroup, x: &AbElement) -> bool {
        self.coords(g, x).is_some()
    }

    pub fn elements(&self, g: &FinAbGroup) -> Vec<AbElement> {
        let a = self.abstract_group();
        a.elements().map(|c| self.embed(g, &c)).collect()
    }
}

/// The lexicographically least character of `g` taking the value
/// `values[i]` on `gens[i]`.
pub fn solve_character_extension(
    g: &FinAbGroup,
    gens: &[AbElement],
    values: &[RootScalar],
) -> Result<AbCharacter> {
    let s = g.rank();
    let n = g.exponent();
    let k = gens.len();
    let mut m: IMat = Vec::with_capacity(k);
    let mut rhs = Vec::with_capacity(k);
    for (i, (x, v)) in gens.iter().zip(values).enumerate() {
        let f = v.exponent_in(n).ok_or_else(|| {
            Error::NoExtension(format!("value {v} is not an {n}-th root of unity"))
        })?;
        let mut r: Vec<i128> =
            x.0.iter()
                .zip(g.orders())
                .map(|(&xj, &d)| (xj * (n / d)) as i128)
                .collect();
        r.extend((0..k).map(|t| if t == i { n as i128 } else { 0 }));
        m.push(r);
        rhs.push(f as i128);
    }
    let c0: Vec<i128> = if k == 0 {
        vec![0; s]
    } else {
        solve_integer(&m, s + k, &rhs)
            .ok_or_else(|| Error::NoExtension("inconsistent values on the subgroup".into()))?[..s]
            .to_vec()
    };
    // lattice of exponent vectors trivial on the subgroup
    let mut lat: IMat = if k == 0 {
        vec![]
    } else {
        integer_kernel(&m, s + k)
            .iter()
            .map(|v| v[..s].to_vec())
            .collect()
    };
    for j in 0..s {
        let mut r = vec![0i128; s];
        r[j] = g.orders()[j] as i128;
        lat.push(r);
    }
    let h = hnf(&lat, s);
    let mut c = c0;
    for row in &h {
        let col = row.iter().position(|&x| x != 0).unwrap();
        let q = c[col].div_euclid(row[col]);
        for (x, y) in c.iter_mut().zip(row) {
            *x -= q * y;
        }
    }
    let chi = AbCharacter(
        c.iter()
            .zip(g.orders())
            .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
            .collect(),
    );
    for (x, v) in gens.iter().zip(values) {
        if g.eval(&chi, x) != *v {
            return Err(Error::NoExtension(format!(
                "restriction check failed at {x:?}"
            )));
        }
    }
    Ok(chi)
}
