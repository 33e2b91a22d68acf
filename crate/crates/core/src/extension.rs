//! The central extension `1 → Z → H → L → 1` attached to an alternating
//! form, its center, and the characters of `Z(H)` lying over `χ`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::abelian::{solve_character_extension, AbCharacter, AbElement, FinAbGroup, Subgroup};
use crate::cocycle::{AlternatingForm, Cocycle2};
use crate::error::{Error, Result};
use crate::scalar::RootScalar;

/// `(z, x)` with `z ∈ Z/m` standing for `ζ_m^z ∈ Z = μ_m` and `x ∈ L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HElem {
    pub z: u64,
    pub x: AbElement,
}

#[derive(Clone, Debug)]
pub struct ExtGroup {
    l: FinAbGroup,
    form: AlternatingForm,
    alpha: Cocycle2,
    m: u64,
    /// `log_ζm α(x, y)`, row-major over lexicographic indices of `L`.
    log_alpha: Vec<u32>,
    rad: Subgroup,
    rad_member: Vec<bool>,
}

impl ExtGroup {
    /// `H` with multiplication `(z₁,x₁)(z₂,x₂) = (z₁+z₂+log α(x₁,x₂), x₁+x₂)`
    /// for the standard cocycle of `form`, and `m` the exponent of the
    /// form's values.
    pub fn build(form: &AlternatingForm) -> Result<ExtGroup> {
        let l = form.group().clone();
        let alpha = Cocycle2::from_form(form);
        let m = form.value_exponent();
        let n = l.order() as usize;
        if n > 1 << 12 {
            return Err(Error::BadForm(format!("|L| = {n} is beyond desk scale")));
        }
        let elems: Vec<AbElement> = l.elements().collect();
        let mut log_alpha = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                let v = alpha.eval(x, y);
                let e = v
                    .exponent_in(m)
                    .ok_or_else(|| Error::BadForm(format!("cocycle value {v} outside mu_{m}")))?;
                log_alpha.push(e as u32);
            }
        }
        let rad = form.radical();
        let mut rad_member = vec![false; n];
        for x in rad.elements(&l) {
            rad_member[l.index(&x)] = true;
        }
        Ok(ExtGroup {
            l,
            form: form.clone(),
            alpha,
            m,
            log_alpha,
            rad,
            rad_member,
        })
    }

    pub fn base(&self) -> &FinAbGroup {
        &self.l
    }

    pub fn form(&self) -> &AlternatingForm {
        &self.form
    }

    pub fn cocycle(&self) -> &Cocycle2 {
        &self.alpha
    }

    /// Order of `Z`.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.m * self.l.order()
    }

    /// `Z(H)/Z`, as a subgroup of `L`.
    pub fn radical(&self) -> &Subgroup {
        &self.rad
    }

    pub fn center_order(&self) -> u64 {
        self.m * self.rad.order()
    }

    /// `log α(x, y)` in `Z/m`.
    pub fn log_alpha(&self, x: &AbElement, y: &AbElement) -> u64 {
        let n = self.l.order() as usize;
        self.log_alpha[self.l.index(x) * n + self.l.index(y)] as u64
    }

    pub fn log_alpha_idx(&self, i: usize, j: usize) -> u64 {
        self.log_alpha[i * self.l.order() as usize + j] as u64
    }

    pub fn identity(&self) -> HElem {
        HElem {
            z: 0,
            x: self.l.zero(),
        }
    }

    pub fn lift(&self, x: &AbElement) -> HElem {
        HElem { z: 0, x: x.clone() }
    }

    pub fn central(&self, z: u64) -> HElem {
        HElem {
            z: z % self.m,
            x: self.l.zero(),
        }
    }

    pub fn mul(&self, a: &HElem, b: &HElem) -> HElem {
        HElem {
            z: (a.z + b.z + self.log_alpha(&a.x, &b.x)) % self.m,
            x: self.l.add(&a.x, &b.x),
        }
    }

    pub fn inv(&self, a: &HElem) -> HElem {
        let nx = self.l.neg(&a.x);
        let c = self.log_alpha(&a.x, &nx);
        HElem {
            z: (2 * self.m - a.z - c) % self.m,
            x: nx,
        }
    }

    pub fn pow(&self, a: &HElem, k: u64) -> HElem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `g h g^{-1} h^{-1}`.
    pub fn commutator(&self, g: &HElem, h: &HElem) -> HElem {
        let gh = self.mul(g, h);
        self.mul(&gh, &self.inv(&self.mul(h, g)))
    }

    /// Position in the enumeration `index(x)·m + z`.
    pub fn index(&self, h: &HElem) -> usize {
        self.l.index(&h.x) * self.m as usize + h.z as usize
    }

    pub fn element(&self, idx: usize) -> HElem {
        HElem {
            z: (idx % self.m as usize) as u64,
            x: self.l.element(idx / self.m as usize),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = HElem> + '_ {
        (0..self.order() as usize).map(|i| self.element(i))
    }

    /// Generators of `H`: `(1, 0)` and the lifts of the generators of `L`.
    pub fn generators(&self) -> Vec<HElem> {
        let mut g = vec![self.central(1)];
        g.extend((0..self.l.rank()).map(|j| self.lift(&self.l.generator(j))));
        g
    }

    pub fn is_central(&self, h: &HElem) -> bool {
        self.generators()
            .iter()
            .all(|g| self.mul(g, h) == self.mul(h, g))
    }

    pub fn in_center(&self, h: &HElem) -> bool {
        self.rad_member[self.l.index(&h.x)]
    }

    /// `χ((z, 0)) = ζ_m^z`.
    pub fn chi(&self, z: u64) -> RootScalar {
        RootScalar::new(self.m, z as i64)
    }

    /// `ρ(g)`: the character `h ↦ χ(h g h^{-1} g^{-1})`, trivial on `Z` and
    /// returned as a character of `L`.
    pub fn rho(&self, g: &HElem) -> AbCharacter {
        let c: Vec<u64> = (0..self.l.rank())
            .map(|j| {
                let h = self.lift(&self.l.generator(j));
                let k = self.commutator(&h, g);
                debug_assert!(self.l.is_zero(&k.x));
                self.chi(k.z)
                    .exponent_in(self.l.orders()[j])
                    .expect("commutator values have order dividing d_j")
            })
            .collect();
        AbCharacter(c)
    }

    /// Structural checks by enumeration: `Z` central, `[H,H] = Z`, and
    /// `Z(H)` equal to the preimage of the radical.
    pub fn verify_structure(&self) -> Result<()> {
        let mut comm_gcd = self.m;
        let gens = self.generators();
        for a in &gens {
            for b in &gens {
                let c = self.commutator(a, b);
                if !self.l.is_zero(&c.x) {
                    return Err(Error::BadForm("commutator outside Z".into()));
                }
                comm_gcd = crate::arith::gcd(comm_gcd, c.z);
            }
        }
        // commutators of generators generate [H,H] in class 2
        if comm_gcd != 1 {
            return Err(Error::BadForm(format!("[H,H] has index {comm_gcd} in Z")));
        }
        let mut center = 0;
        for h in self.elements() {
            let c = self.is_central(&h);
            if c != self.in_center(&h) {
                return Err(Error::BadForm(format!("center mismatch at {h:?}")));
            }
            center += c as u64;
        }
        if center != self.center_order() {
            return Err(Error::BadForm("center order mismatch".into()));
        }
        Ok(())
    }
}

/// The characters `φ` of `Z(H)` restricting to `χ` on `Z`, with extensions
/// `ξ_φ` of `φ φ₀^{-1}` to `H`.
///
/// `φ` is indexed by a character `ε` of `Z(H)/Z ≅ ⊕ Z/s_k` (invariant-factor
/// basis `u_k` of the radical), enumerated lexicographically; `φ₀` is the
/// vertex with `ε = 0`.
#[derive(Clone, Debug)]
pub struct PhiFamily {
    rad: Subgroup,
    rad_group: FinAbGroup,
    /// `φ₀((0, u_k))`.
    pub lambda: Vec<RootScalar>,
    /// `φ₀((0, x))` for `x` in the radical, keyed by the index of `x` in `L`.
    phi0: HashMap<usize, RootScalar>,
    /// Coordinates of radical elements in the basis `u_k`.
    coords: HashMap<usize, AbElement>,
    pub vertices: Vec<AbCharacter>,
    pub xi: Vec<AbCharacter>,
}

impl PhiFamily {
    pub fn build(h: &ExtGroup) -> Result<PhiFamily> {
        let l = h.base();
        let rad = h.radical().clone();
        let rad_group = rad.abstract_group();
        let lifts: Vec<HElem> = rad.basis.iter().map(|u| h.lift(u)).collect();
        let lambda: Vec<RootScalar> = lifts
            .iter()
            .zip(&rad.orders)
            .map(|(g, &s)| {
                let c = h.pow(g, s);
                debug_assert!(l.is_zero(&c.x));
                RootScalar::new(h.m() * s, c.z as i64).normalized()
            })
            .collect();
        let mut phi0 = HashMap::new();
        let mut coords = HashMap::new();
        for c in rad_group.elements() {
            let mut acc = h.identity();
            let mut val = RootScalar::one();
            for (k, &ck) in c.0.iter().enumerate() {
                acc = h.mul(&acc, &h.pow(&lifts[k], ck));
                val = val.mul(&lambda[k].pow(ck as i64));
            }
            // (w, x) has value val, so (0, x) has value val · ζ_m^{-w}
            let v = val.div(&h.chi(acc.z)).normalized();
            let idx = l.index(&acc.x);
            phi0.insert(idx, v);
            coords.insert(idx, c);
        }
        let vertices = rad_group.dual_group();
        let mut xi = Vec::with_capacity(vertices.len());
        for eps in &vertices {
            let vals: Vec<RootScalar> = (0..rad_group.rank())
                .map(|k| rad_group.eval(eps, &rad_group.generator(k)))
                .collect();
            xi.push(solve_character_extension(l, &rad.basis, &vals)?);
        }
        Ok(PhiFamily {
            rad,
            rad_group,
            lambda,
            phi0,
            coords,
            vertices,
            xi,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn radical(&self) -> &Subgroup {
        &self.rad
    }

    pub fn radical_group(&self) -> &FinAbGroup {
        &self.rad_group
    }

    /// `φ_v(h)` for `h ∈ Z(H)`.
    pub fn eval(&self, h: &ExtGroup, v: usize, g: &HElem) -> RootScalar {
        let idx = h.base().index(&g.x);
        let base = self.phi0[&idx];
        let c = &self.coords[&idx];
        h.chi(g.z)
            .mul(&base)
            .mul(&self.rad_group.eval(&self.vertices[v], c))
            .normalized()
    }

    /// Index of the vertex `φ_v · ψ|_{Z(H)}` for a character `ψ` of `L`.
    pub fn shift(&self, l: &FinAbGroup, v: usize, psi: &AbCharacter) -> usize {
        let eps = &self.vertices[v];
        let shifted: Vec<u64> = (0..self.rad_group.rank())
            .map(|k| {
                let val = l.eval(psi, &self.rad.basis[k]);
                let s = self.rad_group.orders()[k];
                (eps.0[k] + val.exponent_in(s).expect("restriction order divides s_k")) % s
            })
            .collect();
        self.rad_group.index(&AbElement(shifted))
    }

    /// Orders of all values taken by the `φ`, for sizing the field.
    pub fn value_orders(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.lambda.iter().map(|v| v.exact_order()).collect();
        out.extend(self.phi0.values().map(|v| v.exact_order()));
        out.extend(self.rad_group.orders().iter().copied());
        out
    }
}

/// The least `x ∈ L` for each character of `L` of the form `ρ((0, x))`.
pub fn rho_table(h: &ExtGroup) -> HashMap<AbCharacter, AbElement> {
    let mut table = HashMap::new();
    for x in h.base().elements() {
        table.entry(h.rho(&h.lift(&x))).or_insert(x);
    }
    table
}

/// A maximal isotropic subgroup `S ⊇ rad` of `L`, grown greedily over the
/// lexicographic enumeration; its preimage `A` in `H` is maximal abelian.
pub fn max_isotropic(h: &ExtGroup) -> Subgroup {
    let l = h.base();
    let form = h.form();
    let mut gens: Vec<AbElement> = h.radical().basis.clone();
    let mut sub = Subgroup::generated(l, &gens);
    for x in l.elements() {
        if sub.contains(l, &x) {
            continue;
        }
        if gens.iter().all(|g| form.eval(&x, g).is_one()) {
            gens.push(x);
            sub = Subgroup::generated(l, &gens);
        }
    }
    sub
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(l: &FinAbGroup, entries: &[(usize, usize, u64, i64)]) -> AlternatingForm {
        let e: Vec<_> = entries
            .iter()
            .map(|&(i, j, n, k)| (i, j, RootScalar::new(n, k)))
            .collect();
        AlternatingForm::new(l, &e).unwrap()
    }

    fn brute_center(h: &ExtGroup) -> Vec<HElem> {
        let all: Vec<HElem> = h.elements().collect();
        all.iter()
            .filter(|g| all.iter().all(|k| h.mul(g, k) == h.mul(k, g)))
            .cloned()
            .collect()
    }

    #[test]
    fn trivial_form_gives_abelian_h() {
        let l = FinAbGroup::new(vec![2]);
        let h = ExtGroup::build(&AlternatingForm::trivial(&l)).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.order(), 2);
        h.verify_structure().unwrap();
        let phis = PhiFamily::build(&h).unwrap();
        assert_eq!(phis.len(), 2);
    }

    #[test]
    fn quantum_plane_extension() {
        let l = FinAbGroup::new(vec![4, 4]);
        let h = ExtGroup::build(&form(&l, &[(0, 1, 4, 1)])).unwrap();
        assert_eq!(h.order(), 64);
        h.verify_structure().unwrap();
        let center = brute_center(&h);
        assert_eq!(center.len(), 4);
        assert!(center.iter().all(|g| l.is_zero(&g.x)));
        // commutators: exactly Z
        let mut comms = std::collections::BTreeSet::new();
        let all: Vec<HElem> = h.elements().collect();
        for a in &all {
            for b in &all {
                comms.insert(h.commutator(a, b));
            }
        }
        assert_eq!(comms.len(), 4);
        let phis = PhiFamily::build(&h).unwrap();
        assert_eq!(phis.len(), 1);
        assert_eq!(phis.xi[0], l.trivial_character());
    }

    #[test]
    fn extraspecial_order_27() {
        let l = FinAbGroup::new(vec![3, 3]);
        let h = ExtGroup::build(&form(&l, &[(0, 1, 3, 1)])).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(brute_center(&h).len(), 3);
        h.verify_structure().unwrap();
    }

    #[test]
    fn rho_examples() {
        let l = FinAbGroup::new(vec![4, 4]);
        let h = ExtGroup::build(&form(&l, &[(0, 1, 4, 1)])).unwrap();
        assert_eq!(h.rho(&h.central(1)), l.trivial_character());
        let g = h.lift(&l.generator(0));
        let r = h.rho(&g);
        // brute force over all 64 h
        for k in h.elements() {
            let c = h.commutator(&k, &g);
            assert_eq!(l.eval(&r, &k.x), h.chi(c.z));
        }
        assert_eq!(l.eval(&r, &l.generator(0)), RootScalar::one());
        assert_eq!(l.eval(&r, &l.generator(1)).exact_order(), 4);
        let all: Vec<HElem> = h.elements().collect();
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(7) {
                assert_eq!(h.rho(&h.mul(a, b)), l.char_mul(&h.rho(a), &h.rho(b)));
            }
        }
        // kernel of ρ is Z(H); image has |H:Z(H)| elements
        let kernel = all
            .iter()
            .filter(|g| h.rho(g) == l.trivial_character())
            .count();
        assert_eq!(kernel as u64, h.center_order());
        assert_eq!(rho_table(&h).len() as u64, h.order() / h.center_order());
    }

    #[test]
    fn degenerate_family() {
        let l = FinAbGroup::new(vec![4, 2]);
        let h = ExtGroup::build(&form(&l, &[(0, 1, 2, 1)])).unwrap();
        h.verify_structure().unwrap();
        assert_eq!(brute_center(&h).len() as u64, h.center_order());
        let phis = PhiFamily::build(&h).unwrap();
        assert_eq!(phis.len() as u64, h.radical().order());
        // each φ restricts to χ and is multiplicative on Z(H)
        let center = brute_center(&h);
        for v in 0..phis.len() {
            for a in &center {
                if l.is_zero(&a.x) {
                    assert_eq!(phis.eval(&h, v, a), h.chi(a.z));
                }
                for b in &center {
                    assert_eq!(
                        phis.eval(&h, v, &h.mul(a, b)),
                        phis.eval(&h, v, a).mul(&phis.eval(&h, v, b))
                    );
                }
                // ξ_φ extends φ φ0^{-1}
                let xi = l.eval(&phis.xi[v], &a.x);
                assert_eq!(xi, phis.eval(&h, v, a).div(&phis.eval(&h, 0, a)));
            }
        }
        let mut tables = std::collections::BTreeSet::new();
        for v in 0..phis.len() {
            let t: Vec<String> = center
                .iter()
                .map(|a| phis.eval(&h, v, a).to_string())
                .collect();
            assert!(tables.insert(t));
        }
    }

    #[test]
    fn max_abelian_examples() {
        for (orders, entries) in [
            (vec![4, 4], vec![(0, 1, 4, 1)]),
            (vec![3, 3], vec![(0, 1, 3, 1)]),
            (vec![4, 2], vec![(0, 1, 2, 1)]),
            (vec![2, 2, 2, 2], vec![(0, 1, 2, 1), (2, 3, 2, 1)]),
        ] {
            let l = FinAbGroup::new(orders);
            let h = ExtGroup::build(&form(&l, &entries)).unwrap();
            let s = max_isotropic(&h);
            let a: Vec<HElem> = h.elements().filter(|g| s.contains(&l, &g.x)).collect();
            for x in &a {
                for y in &a {
                    assert_eq!(h.mul(x, y), h.mul(y, x));
                }
            }
            let cent = h
                .elements()
                .filter(|g| a.iter().all(|y| h.mul(g, y) == h.mul(y, g)))
                .count();
            assert_eq!(cent, a.len());
            assert_eq!(s.order() * s.order(), l.order() * h.radical().order());
        }
        let l = FinAbGroup::new(vec![4, 4]);
        let h = ExtGroup::build(&form(&l, &[(0, 1, 4, 1)])).unwrap();
        assert_eq!(h.m() * max_isotropic(&h).order(), 16);
    }
}
