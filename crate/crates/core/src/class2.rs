//! Irreducible characters of the class-2 group `H` lying over `χ`, computed
//! as exact class functions by induction from a maximal abelian subgroup.

use serde::{Deserialize, Serialize};

use crate::abelian::{AbElement, Subgroup};
use crate::arith::lcm;
use crate::cyclotomic::{Cyc, CycRing};
use crate::error::{Error, Result};
use crate::extension::{max_isotropic, ExtGroup, HElem, PhiFamily};
use crate::scalar::RootScalar;

/// A linear character `ψ` of `A`, the preimage of an isotropic `S ⊆ L`,
/// extending a given `φ` on `Z(H)`.
struct AbelianExtension {
    table: std::collections::HashMap<usize, RootScalar>,
}

impl AbelianExtension {
    fn find(h: &ExtGroup, phis: &PhiFamily, v: usize, s: &Subgroup) -> Result<Self> {
        let l = h.base();
        let lifts: Vec<HElem> = s.basis.iter().map(|u| h.lift(u)).collect();
        let roots: Vec<Vec<RootScalar>> = lifts
            .iter()
            .zip(&s.orders)
            .map(|(g, &t)| {
                let c = h.pow(g, t);
                let base = RootScalar::new(h.m() * t, c.z as i64);
                (0..t)
                    .map(|k| base.mul(&RootScalar::new(t, k as i64)).normalized())
                    .collect()
            })
            .collect();
        let sg = s.abstract_group();
        // (w, x) = ∏ lifts^c for each coordinate vector c
        let words: Vec<(AbElement, HElem)> = sg
            .elements()
            .map(|c| {
                let mut acc = h.identity();
                for (k, &ck) in c.0.iter().enumerate() {
                    acc = h.mul(&acc, &h.pow(&lifts[k], ck));
                }
                (c, acc)
            })
            .collect();
        let centre: Vec<&(AbElement, HElem)> =
            words.iter().filter(|(_, w)| h.in_center(w)).collect();
        let choices: Vec<usize> = s.orders.iter().map(|&t| t as usize).collect();
        let total: usize = choices.iter().product();
        for pick in 0..total {
            let mut idx = pick;
            let mu: Vec<RootScalar> = choices
                .iter()
                .rev()
                .zip(roots.iter().rev())
                .map(|(&t, r)| {
                    let k = idx % t;
                    idx /= t;
                    r[k]
                })
                .collect::<Vec<_>>()
                .into_iter()
                .rev()
                .collect();
            let val = |c: &AbElement, w: &HElem| {
                let mut acc = RootScalar::one();
                for (k, &ck) in c.0.iter().enumerate() {
                    acc = acc.mul(&mu[k].pow(ck as i64));
                }
                // ψ((0, x)) = ψ((w, x)) χ(w)^{-1}
                acc.div(&h.chi(w.z)).normalized()
            };
            let ok = centre.iter().all(|(c, w)| {
                let g = h.lift(&w.x);
                val(c, w) == phis.eval(h, v, &g)
            });
            if ok {
                let table = words
                    .iter()
                    .map(|(c, w)| (l.index(&w.x), val(c, w)))
                    .collect();
                return Ok(AbelianExtension { table });
            }
        }
        Err(Error::NotIntegralM(
            "no extension of phi to the maximal abelian subgroup".into(),
        ))
    }

    fn eval(&self, h: &ExtGroup, g: &HElem) -> RootScalar {
        h.chi(g.z).mul(&self.table[&h.base().index(&g.x)])
    }
}

/// Class functions on `H`, as tables over the enumeration of `H`.
pub struct Class2Characters<'a> {
    h: &'a ExtGroup,
    pub ring: CycRing,
    pub isotropic: Subgroup,
    /// `τ_φ` per vertex.
    pub tau: Vec<Vec<Cyc>>,
    pub degree: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Class2Report {
    pub characters: usize,
    pub degree: u64,
    pub index_of_center: u64,
    pub degree_squared_is_index: bool,
    pub vanishes_off_center: bool,
    pub norm_one: bool,
    pub induced_is_multiple: bool,
    pub injective: bool,
    pub action_compatible: bool,
    pub maximal_abelian_order: u64,
    pub maximal_abelian_self_centralizing: bool,
}

impl Class2Report {
    pub fn passed(&self) -> bool {
        self.degree_squared_is_index
            && self.vanishes_off_center
            && self.norm_one
            && self.induced_is_multiple
            && self.injective
            && self.action_compatible
            && self.maximal_abelian_self_centralizing
    }
}

impl<'a> Class2Characters<'a> {
    /// `τ_φ = ψ↑^H` for every `φ`, with `ψ` extending `φ` to the preimage
    /// of a maximal isotropic subgroup.
    pub fn build(h: &'a ExtGroup, phis: &PhiFamily) -> Result<Self> {
        let l = h.base();
        let s = max_isotropic(h);
        let mut n = lcm(
            h.m() * s.orders.iter().fold(1, |a, &t| lcm(a, t)),
            l.exponent(),
        );
        for o in phis.value_orders() {
            n = lcm(n, o);
        }
        let ring = CycRing::new(n);
        let to_cyc =
            |r: &RootScalar| ring.root(r.exponent_in(n).expect("value order divides n") as i64);
        let lifts: Vec<HElem> = l.elements().map(|y| h.lift(&y)).collect();
        let inv_lifts: Vec<HElem> = lifts.iter().map(|y| h.inv(y)).collect();
        let s_size = s.order() as i64;
        let mut s_member = vec![false; l.order() as usize];
        for x in s.elements(l) {
            s_member[l.index(&x)] = true;
        }
        let mut tau = Vec::with_capacity(phis.len());
        let mut degree = 0;
        for v in 0..phis.len() {
            let psi = AbelianExtension::find(h, phis, v, &s)?;
            let mut table = Vec::with_capacity(h.order() as usize);
            for g in h.elements() {
                if !s_member[l.index(&g.x)] {
                    table.push(ring.zero());
                    continue;
                }
                let mut acc = ring.zero();
                for (y, yi) in lifts.iter().zip(&inv_lifts) {
                    let conj = h.mul(&h.mul(y, &g), yi);
                    acc = ring.add(&acc, &to_cyc(&psi.eval(h, &conj)));
                }
                let val = ring.div_int(&acc, s_size).ok_or_else(|| {
                    Error::NotIntegralM(format!("induced value at {g:?} not divisible by {s_size}"))
                })?;
                table.push(val);
            }
            let d = ring
                .as_int(&table[0])
                .ok_or_else(|| Error::NotIntegralM("tau(1) is not rational".into()))?;
            degree = d as u64;
            tau.push(table);
        }
        Ok(Class2Characters {
            h,
            ring,
            isotropic: s,
            tau,
            degree,
        })
    }

    fn to_cyc(&self, r: &RootScalar) -> Cyc {
        self.ring.root(
            r.exponent_in(self.ring.order())
                .expect("value order divides n") as i64,
        )
    }

    /// `⟨a, b⟩ = |H|^{-1} Σ a(h) conj(b(h))`, if rational.
    pub fn inner(&self, a: &[Cyc], b: &[Cyc]) -> Option<i64> {
        let r = &self.ring;
        let mut acc = r.zero();
        for (x, y) in a.iter().zip(b) {
            if r.is_zero(x) || r.is_zero(y) {
                continue;
            }
            acc = r.add(&acc, &r.mul(x, &r.conj(y)));
        }
        let total = r.div_int(&acc, self.h.order() as i64)?;
        r.as_int(&total)
    }

    /// `φ↑^H`, computed from its definition.
    pub fn induced_linear(&self, phis: &PhiFamily, v: usize) -> Vec<Cyc> {
        let h = self.h;
        let r = &self.ring;
        let l = h.base();
        let lifts: Vec<HElem> = l.elements().map(|y| h.lift(&y)).collect();
        let rad = h.radical().order() as i64;
        h.elements()
            .map(|g| {
                let mut acc = r.zero();
                for y in &lifts {
                    let conj = h.mul(&h.mul(y, &g), &h.inv(y));
                    if h.in_center(&conj) {
                        acc = r.add(&acc, &self.to_cyc(&phis.eval(h, v, &conj)));
                    }
                }
                r.div_int(&acc, rad).expect("orbit sums are divisible")
            })
            .collect()
    }

    pub fn verify(&self, phis: &PhiFamily) -> Class2Report {
        let h = self.h;
        let l = h.base();
        let r = &self.ring;
        let index = h.order() / h.center_order();
        let deg = self.degree;
        let centre: Vec<bool> = h.elements().map(|g| h.in_center(&g)).collect();
        let mut vanishes = true;
        let mut norm = true;
        let mut induced = true;
        for (v, t) in self.tau.iter().enumerate() {
            vanishes &= t.iter().zip(&centre).all(|(x, &c)| c || r.is_zero(x));
            norm &= self.inner(t, t) == Some(1);
            let ind = self.induced_linear(phis, v);
            induced &= ind.iter().zip(t).all(|(a, b)| *a == r.scale(b, deg as i64));
        }
        let mut seen = std::collections::HashSet::new();
        let injective = self.tau.iter().all(|t| seen.insert(t.clone()));
        // τ_{η φ} = η τ_φ, and η τ_φ = τ_φ iff η is trivial on Z(H)
        let mut compatible = true;
        let elems: Vec<HElem> = h.elements().collect();
        for eta in l.dual_group() {
            let eta_vals: Vec<Cyc> = elems
                .iter()
                .map(|g| self.to_cyc(&l.eval(&eta, &g.x)))
                .collect();
            let trivial_on_center = h.radical().basis.iter().all(|u| l.eval(&eta, u).is_one());
            for v in 0..self.tau.len() {
                let w = phis.shift(l, v, &eta);
                let prod: Vec<Cyc> = self.tau[v]
                    .iter()
                    .zip(&eta_vals)
                    .map(|(a, b)| r.mul(a, b))
                    .collect();
                compatible &= prod == self.tau[w];
                compatible &= (prod == self.tau[v]) == trivial_on_center;
            }
        }
        // maximality of A: its centralizer in H is itself
        let s = &self.isotropic;
        let form = h.form();
        let centralizer = l
            .elements()
            .filter(|x| s.basis.iter().all(|b| form.eval(x, b).is_one()))
            .count() as u64;
        Class2Report {
            characters: self.tau.len(),
            degree: deg,
            index_of_center: index,
            degree_squared_is_index: deg * deg == index,
            vanishes_off_center: vanishes,
            norm_one: norm,
            induced_is_multiple: induced,
            injective,
            action_compatible: compatible,
            maximal_abelian_order: h.m() * s.order(),
            maximal_abelian_self_centralizing: centralizer == s.order(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::cocycle::AlternatingForm;

    fn check(orders: Vec<u64>, entries: &[(usize, usize, u64, i64)], deg: u64) -> Class2Report {
        let l = FinAbGroup::new(orders);
        let e: Vec<_> = entries
            .iter()
            .map(|&(i, j, n, k)| (i, j, RootScalar::new(n, k)))
            .collect();
        let h = ExtGroup::build(&AlternatingForm::new(&l, &e).unwrap()).unwrap();
        let phis = PhiFamily::build(&h).unwrap();
        let c = Class2Characters::build(&h, &phis).unwrap();
        let rep = c.verify(&phis);
        assert_eq!(rep.degree, deg);
        assert!(rep.passed(), "{rep:?}");
        rep
    }

    #[test]
    fn abelian_h_has_linear_characters() {
        let rep = check(vec![2], &[], 1);
        assert_eq!(rep.characters, 2);
    }

    #[test]
    fn quantum_plane_degree_four() {
        let rep = check(vec![4, 4], &[(0, 1, 4, 1)], 4);
        assert_eq!(rep.maximal_abelian_order, 16);
    }

    #[test]
    fn extraspecial_degree_three() {
        check(vec![3, 3], &[(0, 1, 3, 1)], 3);
    }

    #[test]
    fn degenerate_and_mixed_forms() {
        let rep = check(vec![4, 2], &[(0, 1, 2, 1)], 2);
        assert_eq!(rep.characters, 2);
        check(vec![2, 2, 2, 2], &[(0, 1, 2, 1), (2, 3, 2, 1)], 4);
        check(vec![6, 6, 3], &[(0, 1, 6, 1), (1, 2, 3, 1)], 6);
        check(vec![4, 4, 2], &[(0, 1, 2, 1), (0, 2, 2, 1)], 2);
    }
}
