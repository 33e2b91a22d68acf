//! Abelian p-groups given as sums of homocyclic components, and abelian
//! p'-groups acting on them.

use serde::{Deserialize, Serialize};

use crate::abelian::{AbElement, FinAbGroup};
use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};
use crate::modmat::{self, ModMat};

/// `(Z/p^exponent)^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub exponent: u32,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGroupData {
    pub p: u64,
    pub components: Vec<Component>,
}

impl PGroupData {
    pub fn new(p: u64, components: Vec<Component>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        for c in &components {
            if c.exponent == 0 || c.rank == 0 {
                return Err(Error::validation(
                    "components need positive exponent and rank",
                ));
            }
        }
        if components.windows(2).any(|w| w[0].exponent < w[1].exponent) {
            return Err(Error::validation(
                "component exponents must be non-increasing",
            ));
        }
        Ok(PGroupData { p, components })
    }

    pub fn modulus(&self, c: usize) -> u64 {
        self.p.pow(self.components[c].exponent)
    }

    pub fn order(&self) -> u64 {
        self.components
            .iter()
            .map(|c| self.p.pow(c.exponent * c.rank as u32))
            .product()
    }

    /// Rank of `P/Φ(P)`.
    pub fn frattini_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// `P` as a [`FinAbGroup`], components flattened in order.
    pub fn group(&self) -> FinAbGroup {
        FinAbGroup::new(
            self.components
                .iter()
                .flat_map(|c| std::iter::repeat_n(self.p.pow(c.exponent), c.rank))
                .collect(),
        )
    }

    /// Flat coordinate range of a component.
    pub fn range(&self, c: usize) -> std::ops::Range<usize> {
        let start: usize = self.components[..c].iter().map(|c| c.rank).sum();
        start..start + self.components[c].rank
    }

    /// Component of each flat coordinate.
    pub fn component_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (c, comp) in self.components.iter().enumerate() {
            acc += comp.rank;
            if k < acc {
                return c;
            }
        }
        panic!("coordinate {k} out of range")
    }

    /// Exponents `n_i` of the flat coordinates.
    pub fn flat_exponents(&self) -> Vec<u32> {
        self.components
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.exponent, c.rank))
            .collect()
    }
}

/// `L` acting on `P`: one matrix per generator of `L` and per component,
/// acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LAction {
    pub l: FinAbGroup,
    pub mats: Vec<Vec<ModMat>>,
}

impl LAction {
    /// Validate and build. Matrices are reduced modulo each component's
    /// `p^n`.
    pub fn new(pg: &PGroupData, l: FinAbGroup, raw: Vec<Vec<Vec<Vec<i64>>>>) -> Result<Self> {
        if raw.len() != l.rank() {
            return Err(Error::validation(format!(
                "expected {} generator actions, found {}",
                l.rank(),
                raw.len()
            )));
        }
        for &d in l.orders() {
            if gcd(d, pg.p) != 1 {
                return Err(Error::OrderDivisibleByP { p: pg.p, order: d });
            }
        }
        let mut mats = Vec::new();
        for (j, per) in raw.iter().enumerate() {
            if per.len() != pg.components.len() {
                return Err(Error::validation(format!(
                    "generator {} needs one matrix per component",
                    j + 1
                )));
            }
            let mut row = Vec::new();
            for (c, m) in per.iter().enumerate() {
                let r = pg.components[c].rank;
                if m.len() != r || m.iter().any(|x| x.len() != r) {
                    return Err(Error::validation(format!(
                        "generator {} component {}: matrix must be {r}x{r}",
                        j + 1,
                        c + 1
                    )));
                }
                let mm = modmat::reduce(m, pg.modulus(c));
                if modmat::inverse(&mm, pg.p, pg.modulus(c)).is_none() {
                    return Err(Error::validation(format!(
                        "generator {} component {}: matrix is not invertible",
                        j + 1,
                        c + 1
                    )));
                }
                row.push(mm);
            }
            mats.push(row);
        }
        let act = LAction { l, mats };
        act.validate(pg)?;
        Ok(act)
    }

    fn validate(&self, pg: &PGroupData) -> Result<()> {
        let s = self.l.rank();
        for c in 0..pg.components.len() {
            let m = pg.modulus(c);
            for j in 0..s {
                let a = &self.mats[j][c];
                for k in j + 1..s {
                    let b = &self.mats[k][c];
                    if modmat::mul(a, b, m) != modmat::mul(b, a, m) {
                        return Err(Error::validation(format!(
                            "actions of generators {} and {} do not commute",
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        for j in 0..s {
            let d = self.l.orders()[j];
            let ok = (0..pg.components.len()).all(|c| {
                modmat::is_identity(
                    &modmat::pow(&self.mats[j][c], d, pg.modulus(c)),
                    pg.modulus(c),
                )
            });
            if !ok {
                return Err(Error::validation(format!(
                    "generator {} does not act with order dividing {d}",
                    j + 1
                )));
            }
        }
        // faithfulness
        for y in self.l.elements().skip(1) {
            let my = self.matrices(pg, &y);
            if (0..pg.components.len()).all(|c| modmat::is_identity(&my[c], pg.modulus(c))) {
                return Err(Error::validation(format!(
                    "action is not faithful: {:?} acts trivially",
                    y.0
                )));
            }
        }
        Ok(())
    }

    /// `M_y = ∏ M_j^{y_j}` per component.
    pub fn matrices(&self, pg: &PGroupData, y: &AbElement) -> Vec<ModMat> {
        (0..pg.components.len())
            .map(|c| {
                let m = pg.modulus(c);
                let mut acc = modmat::identity(pg.components[c].rank);
                for (j, &e) in y.0.iter().enumerate() {
                    if e > 0 {
                        acc = modmat::mul(&acc, &modmat::pow(&self.mats[j][c], e, m), m);
                    }
                }
                acc
            })
            .collect()
    }

    /// Image of `x ∈ P` under `y ∈ L`, given the matrices of `y`.
    pub fn apply(&self, pg: &PGroupData, my: &[ModMat], x: &AbElement) -> AbElement {
        let mut out = Vec::with_capacity(x.0.len());
        for (c, m) in my.iter().enumerate() {
            let r = pg.range(c);
            out.extend(modmat::mul_vec(m, &x.0[r], pg.modulus(c)));
        }
        AbElement(out)
    }

    /// Per generator, the block-diagonal action on `P/Φ(P)` over `F_p`.
    pub fn action_on_frattini(&self, pg: &PGroupData) -> Vec<ModMat> {
        let r = pg.frattini_rank();
        self.mats
            .iter()
            .map(|per| {
                let mut big = vec![vec![0u64; r]; r];
                for (c, m) in per.iter().enumerate() {
                    let off = pg.range(c).start;
                    for (i, row) in m.iter().enumerate() {
                        for (j, &x) in row.iter().enumerate() {
                            big[off + i][off + j] = x % pg.p;
                        }
                    }
                }
                big
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(n: u32, r: usize) -> Component {
        Component {
            exponent: n,
            rank: r,
        }
    }

    #[test]
    fn frattini_examples() {
        let pg = PGroupData::new(5, vec![comp(1, 2)]).unwrap();
        let act = LAction::new(
            &pg,
            FinAbGroup::new(vec![4, 4]),
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
        )
        .unwrap();
        assert_eq!(act.action_on_frattini(&pg)[0], vec![vec![2, 0], vec![0, 1]]);

        let pg = PGroupData::new(3, vec![comp(2, 1)]).unwrap();
        let act = LAction::new(&pg, FinAbGroup::new(vec![6]), vec![vec![vec![vec![2]]]]);
        // 2 has order 6 mod 9 but 6 is divisible by 3
        assert!(matches!(act, Err(Error::OrderDivisibleByP { .. })));
        let act = LAction::new(&pg, FinAbGroup::new(vec![2]), vec![vec![vec![vec![8]]]]).unwrap();
        assert_eq!(act.action_on_frattini(&pg)[0], vec![vec![2]]);

        let pg = PGroupData::new(2, vec![comp(1, 4)]).unwrap();
        let a = vec![
            vec![0, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let b = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 1],
        ];
        let act = LAction::new(
            &pg,
            FinAbGroup::new(vec![3, 3]),
            vec![vec![a.clone()], vec![b]],
        )
        .unwrap();
        let fr = act.action_on_frattini(&pg);
        assert_eq!(fr[0][0][..2], [0, 1]);
        assert_eq!(fr[0][2][2..], [1, 0]);
    }

    #[test]
    fn validation_rejects_bad_actions() {
        let pg = PGroupData::new(5, vec![comp(1, 2)]).unwrap();
        // non-commuting
        let r = LAction::new(
            &pg,
            FinAbGroup::new(vec![4, 2]),
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![0, 1], vec![1, 0]]],
            ],
        );
        assert!(matches!(r, Err(Error::Validation { .. })));
        // order of the p-group element: unipotent matrix has order 5
        let r = LAction::new(
            &pg,
            FinAbGroup::new(vec![5]),
            vec![vec![vec![vec![1, 1], vec![0, 1]]]],
        );
        assert!(matches!(r, Err(Error::OrderDivisibleByP { .. })));
        // wrong order
        let r = LAction::new(
            &pg,
            FinAbGroup::new(vec![2]),
            vec![vec![vec![vec![2, 0], vec![0, 1]]]],
        );
        assert!(r.is_err());
        // unfaithful
        let r = LAction::new(
            &pg,
            FinAbGroup::new(vec![4, 2]),
            vec![
                vec![vec![vec![2, 0], vec![0, 2]]],
                vec![vec![vec![4, 0], vec![0, 4]]],
            ],
        );
        assert!(r.is_err());
        assert!(PGroupData::new(3, vec![comp(1, 1), comp(2, 1)]).is_err());
    }
}
