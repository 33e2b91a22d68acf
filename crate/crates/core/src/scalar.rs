//! Exact roots of unity in exponent form.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm, mod_inv};
use crate::error::{Error, Result};

/// The root of unity `ζ_order^exponent`.
///
/// The stored order is the order of the ambient cyclic group `μ_order`, not
/// necessarily the exact order of the element; equality and hashing compare
/// the underlying root, so `ζ_4^2 == ζ_2^1`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RootScalar {
    order: u64,
    exponent: u64,
}

impl RootScalar {
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order > 0, "root order must be positive");
        RootScalar {
            order,
            exponent: exponent.rem_euclid(order as i64) as u64,
        }
    }

    pub fn one() -> Self {
        RootScalar {
            order: 1,
            exponent: 0,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// Same root written with its exact order.
    pub fn normalized(&self) -> Self {
        if self.exponent == 0 {
            return RootScalar::one();
        }
        let g = gcd(self.exponent, self.order);
        RootScalar {
            order: self.order / g,
            exponent: self.exponent / g,
        }
    }

    /// Exact multiplicative order.
    pub fn exact_order(&self) -> u64 {
        self.normalized().order
    }

    /// Exponent of this root in `μ_n`, if the root lies there.
    pub fn exponent_in(&self, n: u64) -> Option<u64> {
        let r = self.normalized();
        n.is_multiple_of(r.order)
            .then(|| r.exponent * (n / r.order))
    }

    /// Same root as an element of `μ_n`; panics if it does not lie there.
    pub fn lift_to(&self, n: u64) -> Self {
        let e = self
            .exponent_in(n)
            .unwrap_or_else(|| panic!("{self} does not lie in mu_{n}"));
        RootScalar {
            order: n,
            exponent: e,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = lcm(self.order, other.order);
        let e = (self.exponent as u128 * (l / self.order) as u128
            + other.exponent as u128 * (l / other.order) as u128)
            % l as u128;
        RootScalar {
            order: l,
            exponent: e as u64,
        }
    }

    pub fn inv(&self) -> Self {
        RootScalar {
            order: self.order,
            exponent: (self.order - self.exponent) % self.order,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.order as i128);
        RootScalar {
            order: self.order,
            exponent: e as u64,
        }
    }

    /// A `k`-th root: `ζ_{order·k}^{exponent}`.
    pub fn root(&self, k: u64) -> Self {
        RootScalar {
            order: self.order * k,
            exponent: self.exponent,
        }
    }

    /// `μ ↦ μ^{1/q}`: the inverse of the `q`-power map on `μ_order`.
    pub fn frobenius_inverse_power(&self, q: u64) -> Result<Self> {
        let n = self.order;
        let inv = mod_inv(q % n, n).ok_or(Error::NotInvertible {
            value: q,
            modulus: n,
        })?;
        Ok(self.pow(inv as i64))
    }
}

impl PartialEq for RootScalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.order == b.order && a.exponent == b.exponent
    }
}

impl Eq for RootScalar {}

impl Hash for RootScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let n = self.normalized();
        n.order.hash(state);
        n.exponent.hash(state);
    }
}

impl fmt::Display for RootScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}^{}", self.order, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn frobenius_inverse_power_examples() {
        let z4 = RootScalar::new(4, 1);
        assert_eq!(z4.frobenius_inverse_power(25).unwrap(), z4);
        let z3 = RootScalar::new(3, 1);
        // 4 * 1 = 1 mod 3
        assert_eq!(z3.frobenius_inverse_power(4).unwrap(), z3);
        let z8 = RootScalar::new(8, 1);
        assert_eq!(z8.frobenius_inverse_power(9).unwrap(), z8);
        let z8_3 = RootScalar::new(8, 3);
        assert_eq!(
            z8_3.frobenius_inverse_power(3).unwrap(),
            RootScalar::new(8, 1)
        );
        assert!(matches!(
            RootScalar::new(4, 1).frobenius_inverse_power(2),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn equality_ignores_ambient_order() {
        assert_eq!(RootScalar::new(4, 2), RootScalar::new(2, 1));
        assert_eq!(RootScalar::new(6, 0), RootScalar::one());
        assert_ne!(RootScalar::new(4, 1), RootScalar::new(4, 3));
        assert_eq!(RootScalar::new(12, 8).exact_order(), 3);
    }

    #[test]
    fn roots_and_lifts() {
        let c = RootScalar::new(2, 1);
        let r = c.root(2);
        assert_eq!(r.pow(2), c);
        assert_eq!(RootScalar::new(2, 1).exponent_in(4), Some(2));
        assert_eq!(RootScalar::new(4, 1).exponent_in(2), None);
    }

    proptest! {
        #[test]
        fn power_rule(n in 1u64..64, e in 0i64..64, k in -40i64..40) {
            let z = RootScalar::new(n, e);
            let zk = z.pow(k);
            prop_assert_eq!(zk.exponent() as i128, (k as i128 * z.exponent() as i128).rem_euclid(n as i128));
        }

        #[test]
        fn product_order_divides_lcm(n1 in 1u64..40, e1 in 0i64..40, n2 in 1u64..40, e2 in 0i64..40) {
            let a = RootScalar::new(n1, e1);
            let b = RootScalar::new(n2, e2);
            prop_assert_eq!(lcm(n1, n2) % a.mul(&b).exact_order(), 0);
            prop_assert_eq!(a.mul(&b).div(&b), a);
        }

        #[test]
        fn inverse_power_inverts(n in 1u64..50, e in 0i64..50, q_exp in 1u32..4, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            prop_assume!(gcd(n, p) == 1);
            let q = p.pow(q_exp);
            let z = RootScalar::new(n, e);
            let w = z.frobenius_inverse_power(q).unwrap();
            prop_assert_eq!(w.pow(q as i64), z);
        }
    }
}
