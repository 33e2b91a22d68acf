//! Finite fields `F_{p^e}` chosen just large enough to hold the roots of unity
//! an instance needs.
//!
//! Elements are stored as discrete logarithms to a fixed primitive element,
//! with a Zech table for addition. Coordinates in the polynomial basis
//! `1, x, ..., x^{e-1}` (modulo the least irreducible monic polynomial) are
//! available through [`FieldSpec::coords`].

use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, is_prime, lcm, mult_order, prime_factors};
use crate::error::{Error, Result};
use crate::scalar::RootScalar;

/// Largest field the table representation accepts.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// A field element: the discrete log to the field generator, or zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(u32::MAX);
    pub const ONE: Fe = Fe(0);

    pub fn is_zero(self) -> bool {
        self == Fe::ZERO
    }
}

#[derive(Clone, Serialize)]
pub struct FieldSpec {
    p: u64,
    degree: u32,
    size: u64,
    /// Low-to-high coefficients of the monic modulus, leading 1 included.
    modulus: Vec<u64>,
    /// Packed coordinates of the generator.
    generator: u64,
    #[serde(skip)]
    exp: Vec<u32>,
    #[serde(skip)]
    log: Vec<u32>,
    #[serde(skip)]
    zech: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.degree == other.degree
            && self.modulus == other.modulus
            && self.generator == other.generator
    }
}

/// Polynomial arithmetic on packed coordinate vectors, used only while
/// building the tables.
struct PolyCtx {
    p: u64,
    e: usize,
    modulus: Vec<u64>,
}

impl PolyCtx {
    fn unpack(&self, mut v: u64) -> Vec<u64> {
        let mut out = vec![0; self.e];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    fn pack(&self, c: &[u64]) -> u64 {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let (a, b) = (self.unpack(a), self.unpack(b));
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.e];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (self.e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (t, &m) in self.modulus[..self.e].iter().enumerate() {
                let idx = k - self.e + t;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
        }
        self.pack(&prod[..self.e])
    }

    fn pow(&self, a: u64, mut k: u64) -> u64 {
        let mut acc = 1;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }
}

/// Remainder of `a` modulo monic `b` over `F_p`; coefficient vectors low to high.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (t, &c) in b.iter().enumerate() {
                r[shift + t] = (r[shift + t] + (p - lead) * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// The smallest `F_{p^e}` containing the `n`-th roots of unity for every
    /// `n` in `orders`.
    pub fn make(p: u64, orders: &[u64]) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        let mut l = 1;
        for &n in orders {
            if n == 0 || gcd(n, p) != 1 {
                return Err(Error::OrderDivisibleByP { p, order: n });
            }
            l = lcm(l, n);
        }
        let e = mult_order(p % l, l) as u32;
        Self::with_degree(p, e)
    }

    pub fn with_degree(p: u64, e: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        let size = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(e)))?;
        let ed = e as usize;
        // least irreducible monic polynomial, lower coefficients in packed order
        let mut modulus = None;
        for low in 0..size {
            let mut f = Vec::with_capacity(ed + 1);
            let mut v = low;
            for _ in 0..ed {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            if is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("irreducible polynomials exist in every degree");
        let ctx = PolyCtx {
            p,
            e: ed,
            modulus: modulus.clone(),
        };
        let n = size - 1;
        let primes = prime_factors(n);
        let generator = (1..size)
            .find(|&g| ctx.pow(g, n) == 1 && primes.iter().all(|&r| ctx.pow(g, n / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; size as usize];
        let mut x = 1u64;
        for k in 0..n {
            exp.push(x as u32);
            log[x as usize] = k as u32;
            x = ctx.mul(x, generator);
        }
        debug_assert_eq!(x, 1);
        // zech[k] = log(1 + g^k)
        let one = ctx.unpack(1);
        let mut zech = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            let c = ctx.unpack(exp[k] as u64);
            let s: Vec<u64> = c.iter().zip(&one).map(|(a, b)| (a + b) % p).collect();
            zech.push(log[ctx.pack(&s) as usize]);
        }
        Ok(FieldSpec {
            p,
            degree: e,
            size,
            modulus,
            generator,
            exp,
            log,
            zech,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Order of the multiplicative group, `p^e - 1`.
    pub fn unit_order(&self) -> u64 {
        self.size - 1
    }

    pub fn generator(&self) -> Fe {
        if self.size == 2 {
            Fe::ONE
        } else {
            Fe(1)
        }
    }

    /// Packed coordinates of the generator in the polynomial basis.
    pub fn generator_coords(&self) -> Vec<u64> {
        self.coords(self.generator())
    }

    pub fn supports_order(&self, n: u64) -> bool {
        n > 0 && self.unit_order().is_multiple_of(n)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let n = self.unit_order() as u32;
        let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + n - a.0 };
        let z = self.zech[d as usize];
        if z == u32::MAX {
            Fe::ZERO
        } else {
            Fe(((a.0 as u64 + z as u64) % n as u64) as u32)
        }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        let n = self.unit_order();
        Fe(((a.0 as u64 + n / 2) % n) as u32)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let n = self.unit_order();
        Fe(((a.0 as u64 + b.0 as u64) % n) as u32)
    }

    pub fn inv(&self, a: Fe) -> Fe {
        assert!(!a.is_zero(), "inverse of zero");
        let n = self.unit_order() as u32;
        Fe((n - a.0) % n)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, k: i64) -> Fe {
        if a.is_zero() {
            return if k == 0 { Fe::ONE } else { Fe::ZERO };
        }
        let n = self.unit_order() as i128;
        Fe((a.0 as i128 * k as i128).rem_euclid(n) as u32)
    }

    /// `λ ↦ λ^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as i64)
    }

    /// `λ ↦ λ^{p^k}`.
    pub fn frobenius_power(&self, a: Fe, k: u32) -> Fe {
        if a.is_zero() {
            return a;
        }
        let n = self.unit_order();
        let e = crate::arith::mod_pow(self.p, k as u64, n.max(1));
        self.pow(a, e as i64)
    }

    /// Image of an integer under `Z -> F_p ⊆ F_{p^e}`.
    pub fn from_int(&self, n: i64) -> Fe {
        let v = n.rem_euclid(self.p as i64) as usize;
        let l = self.log[v];
        if l == u32::MAX {
            Fe::ZERO
        } else {
            Fe(l)
        }
    }

    pub fn from_packed(&self, packed: u64) -> Fe {
        let l = self.log[packed as usize];
        if l == u32::MAX {
            Fe::ZERO
        } else {
            Fe(l)
        }
    }

    pub fn packed(&self, a: Fe) -> u64 {
        if a.is_zero() {
            0
        } else {
            self.exp[a.0 as usize] as u64
        }
    }

    /// Coordinates in the polynomial basis, low degree first.
    pub fn coords(&self, a: Fe) -> Vec<u64> {
        let mut v = self.packed(a);
        (0..self.degree)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        std::iter::once(Fe::ZERO).chain((0..self.unit_order() as u32).map(Fe))
    }

    /// `generator^{(p^e - 1)/n · k}` for `z = ζ_n^k`.
    pub fn embed(&self, z: &RootScalar) -> Result<Fe> {
        let z = z.normalized();
        let n = z.order();
        if !self.supports_order(n) {
            return Err(Error::OrderNotSupported {
                order: n,
                group_order: self.unit_order(),
            });
        }
        let step = self.unit_order() / n;
        Ok(Fe(
            ((step as u128 * z.exponent() as u128) % self.unit_order() as u128) as u32,
        ))
    }

    /// Like [`embed`](Self::embed) for roots already known to be supported.
    pub fn zeta(&self, z: &RootScalar) -> Fe {
        self.embed(z)
            .unwrap_or_else(|e| panic!("root {z} not in field: {e}"))
    }

    /// The root of unity a nonzero element is, as `ζ_{p^e-1}^{log}`.
    pub fn root_of(&self, a: Fe) -> RootScalar {
        assert!(!a.is_zero());
        RootScalar::new(self.unit_order(), a.0 as i64)
    }

    pub fn display(&self, a: Fe) -> String {
        if self.degree == 1 {
            format!("{}", self.packed(a))
        } else {
            let c = self.coords(a);
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| match i {
                    0 => format!("{x}"),
                    1 if x == 1 => "x".to_string(),
                    1 => format!("{x}x"),
                    _ if x == 1 => format!("x^{i}"),
                    _ => format!("{x}x^{i}"),
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        }
    }

    pub fn name(&self) -> String {
        if self.degree == 1 {
            format!("F_{}", self.p)
        } else {
            format!("F_{}^{}", self.p, self.degree)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_make_examples() {
        assert_eq!(FieldSpec::make(5, &[4]).unwrap().degree(), 1);
        assert_eq!(FieldSpec::make(2, &[3]).unwrap().degree(), 2);
        // order of 3 mod 8 by direct exponentiation: 3, 9 = 1
        let mut k = 1;
        let mut x = 3;
        while x != 1 {
            x = x * 3 % 8;
            k += 1;
        }
        assert_eq!(FieldSpec::make(3, &[8]).unwrap().degree(), k);
        assert_eq!(
            FieldSpec::make(4, &[3]),
            Err(Error::CompositeCharacteristic(4))
        );
        assert!(matches!(
            FieldSpec::make(3, &[6]),
            Err(Error::OrderDivisibleByP { .. })
        ));
    }

    #[test]
    fn zeta_embed_examples() {
        let f5 = FieldSpec::make(5, &[4]).unwrap();
        assert_eq!(f5.generator_coords(), vec![2]);
        assert_eq!(f5.embed(&RootScalar::new(4, 0)).unwrap(), Fe::ONE);
        let z = f5.embed(&RootScalar::new(4, 1)).unwrap();
        assert_eq!(f5.packed(z), 2);
        // 2 has order 4 in F_5
        let mut x = 2u64;
        let mut k = 1;
        while x != 1 {
            x = x * 2 % 5;
            k += 1;
        }
        assert_eq!(k, 4);

        let f4 = FieldSpec::make(2, &[3]).unwrap();
        let a = f4.embed(&RootScalar::new(3, 1)).unwrap();
        let b = f4.embed(&RootScalar::new(3, 2)).unwrap();
        assert_eq!(f4.mul(a, b), Fe::ONE);
        assert!(matches!(
            f4.embed(&RootScalar::new(5, 1)),
            Err(Error::OrderNotSupported { .. })
        ));
    }

    #[test]
    fn modulus_is_least_irreducible() {
        let f4 = FieldSpec::with_degree(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f9 = FieldSpec::with_degree(3, 2).unwrap();
        // x^2 + 1 is the least irreducible monic quadratic over F_3
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    fn brute_add(f: &FieldSpec, a: Fe, b: Fe) -> Fe {
        let (ca, cb) = (f.coords(a), f.coords(b));
        let s: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| (x + y) % f.characteristic())
            .collect();
        let packed = s
            .iter()
            .rev()
            .fold(0, |acc, &x| acc * f.characteristic() + x);
        f.from_packed(packed)
    }

    #[test]
    fn frobenius_is_a_field_automorphism_exhaustive() {
        for (p, e) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (5, 1),
            (5, 2),
            (7, 2),
            (2, 8),
        ] {
            let f = FieldSpec::with_degree(p, e).unwrap();
            if f.size() > 256 {
                continue;
            }
            let elems: Vec<Fe> = f.elements().collect();
            for &a in &elems {
                for &b in &elems {
                    assert_eq!(f.add(a, b), brute_add(&f, a, b));
                    let s = f.add(a, b);
                    assert_eq!(f.frobenius(s), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_sampled_in_larger_field() {
        use rand::{Rng, SeedableRng};
        let f = FieldSpec::with_degree(3, 8).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let a = f.from_packed(rng.gen_range(0..f.size()));
            let b = f.from_packed(rng.gen_range(0..f.size()));
            assert_eq!(f.add(a, b), brute_add(&f, a, b));
            assert_eq!(
                f.frobenius(f.add(a, b)),
                f.add(f.frobenius(a), f.frobenius(b))
            );
        }
    }

    #[test]
    fn embedding_is_injective_homomorphism() {
        for (p, orders) in [
            (5u64, vec![4u64]),
            (2, vec![3, 7]),
            (3, vec![8]),
            (2, vec![63]),
            (5, vec![12]),
        ] {
            let f = FieldSpec::make(p, &orders).unwrap();
            for &n in &orders {
                for d in 1..=n {
                    if n % d != 0 || d > 64 {
                        continue;
                    }
                    let mut seen = std::collections::HashSet::new();
                    for a in 0..d as i64 {
                        let za = RootScalar::new(d, a);
                        assert!(seen.insert(f.embed(&za).unwrap()));
                        for b in 0..d as i64 {
                            let zb = RootScalar::new(d, b);
                            assert_eq!(
                                f.embed(&za.mul(&zb)).unwrap(),
                                f.mul(f.embed(&za).unwrap(), f.embed(&zb).unwrap())
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn negation_and_integers() {
        let f = FieldSpec::with_degree(5, 2).unwrap();
        for a in f.elements() {
            assert!(f.add(a, f.neg(a)).is_zero());
        }
        assert_eq!(f.from_int(-1), f.neg(Fe::ONE));
        assert_eq!(f.from_int(5), Fe::ZERO);
        assert_eq!(f.mul(f.from_int(2), f.from_int(3)), f.from_int(1));
    }
}
