//! The quiver with relations of the basic algebra `𝔄 ⊆ k(P⋊H)e`: vertices
//! `[φ]`, arrows `a_{i,φ} = g_{i,φ} w_i e_φ : [φ] → [φψ_i]`, commutation
//! and power relations, and their verification inside the algebra.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::abelian::{AbCharacter, AbElement};
use crate::error::{Error, Result};
use crate::extension::{rho_table, ExtGroup, HElem, PhiFamily};
use crate::field::Fe;
use crate::group_algebra::{EigenBasisW, TwistedAlgebra};
use crate::linalg::{self, Echelon};
use crate::scalar::RootScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    /// Exponents of `φ/φ₀` on the radical basis.
    pub epsilon: Vec<u64>,
    /// Exponents of the chosen extension `ξ_φ` to `L`.
    pub xi: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowType {
    /// Eigencharacter `ψ_i` of `w_i`, as exponents on the generators of `L`.
    pub psi: Vec<u64>,
    pub component: usize,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub kind: usize,
    pub source: usize,
    pub target: usize,
    pub g: HElem,
}

/// `a_{j,φψ_i} a_{i,φ} = q · a_{i,φψ_j} a_{j,φ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Commutation {
    pub i: usize,
    pub j: usize,
    pub vertex: usize,
    pub q: RootScalar,
    pub z: HElem,
    pub phi_z: RootScalar,
}

/// The composable path of `length` arrows of one kind starting at `vertex`
/// is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRelation {
    pub kind: usize,
    pub vertex: usize,
    pub length: u64,
    /// Arrow indices in order of traversal.
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<Vertex>,
    pub arrow_types: Vec<ArrowType>,
    /// Indexed by `vertex · r + kind`.
    pub arrows: Vec<Arrow>,
    pub commutations: Vec<Commutation>,
    pub powers: Vec<PowerRelation>,
    pub p: u64,
}

impl QuiverPresentation {
    pub fn arrow_index(&self, kind: usize, vertex: usize) -> usize {
        vertex * self.arrow_types.len() + kind
    }

    pub fn arrow(&self, kind: usize, vertex: usize) -> &Arrow {
        &self.arrows[self.arrow_index(kind, vertex)]
    }
}

/// Least `g = (0, x)` with `ρ(g) = ξ_{φψ} ξ_φ^{-1} ψ^{-1}`.
pub fn choose_g(
    h: &ExtGroup,
    phis: &PhiFamily,
    rho: &HashMap<AbCharacter, AbElement>,
    psi: &AbCharacter,
    v: usize,
) -> Result<HElem> {
    let l = h.base();
    let t = phis.shift(l, v, psi);
    let target = l.char_mul(
        &l.char_mul(&phis.xi[t], &l.char_inv(&phis.xi[v])),
        &l.char_inv(psi),
    );
    rho.get(&target)
        .map(|x| h.lift(x))
        .ok_or_else(|| Error::NoSolution(format!("rho(g) = {:?} at vertex {v}", target.0)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QValue {
    pub z: HElem,
    pub phi_z: RootScalar,
    pub q: RootScalar,
}

/// `z = (g_{i,φψ_j} g_{j,φ})^{-1} g_{j,φψ_i} g_{i,φ}` and
/// `q = φ(z) ψ_i(z) ψ_j(z) ψ_i(g_{j,φ}) ψ_j(g_{i,φ})^{-1}`. The last four
/// factors come from moving `z` and the `g` past the `w`.
pub fn compute_q(
    h: &ExtGroup,
    phis: &PhiFamily,
    psi: &[AbCharacter],
    g: &[Vec<HElem>],
    i: usize,
    j: usize,
    v: usize,
) -> Result<QValue> {
    let l = h.base();
    let vi = phis.shift(l, v, &psi[i]);
    let vj = phis.shift(l, v, &psi[j]);
    let left = h.mul(&g[j][vi], &g[i][v]);
    let right = h.mul(&g[i][vj], &g[j][v]);
    let z = h.mul(&h.inv(&right), &left);
    if !h.in_center(&z) {
        return Err(Error::ZNotCentral { i, j, vertex: v });
    }
    let phi_z = phis.eval(h, v, &z);
    let q = phi_z
        .mul(&l.eval(&psi[i], &z.x))
        .mul(&l.eval(&psi[j], &z.x))
        .mul(&l.eval(&psi[i], &g[j][v].x))
        .div(&l.eval(&psi[j], &g[i][v].x))
        .normalized();
    Ok(QValue { z, phi_z, q })
}

/// The presentation together with the chosen `g_{i,φ}`, indexed `[i][φ]`.
pub fn emit_presentation(
    h: &ExtGroup,
    phis: &PhiFamily,
    wb: &EigenBasisW,
    p: u64,
) -> Result<(QuiverPresentation, Vec<Vec<HElem>>)> {
    let l = h.base();
    let r = wb.len();
    let nv = phis.len();
    let rho = rho_table(h);
    let mut g = vec![Vec::with_capacity(nv); r];
    for (i, psi) in wb.psi.iter().enumerate() {
        for v in 0..nv {
            g[i].push(choose_g(h, phis, &rho, psi, v)?);
        }
    }
    let vertices = (0..nv)
        .map(|v| Vertex {
            label: format!("[phi{v}]"),
            epsilon: phis.vertices[v].0.clone(),
            xi: phis.xi[v].0.clone(),
        })
        .collect();
    let arrow_types = (0..r)
        .map(|i| ArrowType {
            psi: wb.psi[i].0.clone(),
            component: wb.components[i],
            exponent: wb.exponents[i],
        })
        .collect();
    let mut arrows = Vec::with_capacity(nv * r);
    for v in 0..nv {
        for i in 0..r {
            arrows.push(Arrow {
                kind: i,
                source: v,
                target: phis.shift(l, v, &wb.psi[i]),
                g: g[i][v].clone(),
            });
        }
    }
    let mut commutations = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for v in 0..nv {
                let qv = compute_q(h, phis, &wb.psi, &g, i, j, v)?;
                commutations.push(Commutation {
                    i,
                    j,
                    vertex: v,
                    q: qv.q,
                    z: qv.z,
                    phi_z: qv.phi_z,
                });
            }
        }
    }
    let mut powers = Vec::new();
    for i in 0..r {
        let length = p.pow(wb.exponents[i]);
        for v in 0..nv {
            let mut path = Vec::with_capacity(length as usize);
            let mut cur = v;
            for _ in 0..length {
                path.push(cur * r + i);
                cur = arrows[cur * r + i].target;
            }
            powers.push(PowerRelation {
                kind: i,
                vertex: v,
                length,
                path,
            });
        }
    }
    Ok((
        QuiverPresentation {
            vertices,
            arrow_types,
            arrows,
            commutations,
            powers,
            p,
        },
        g,
    ))
}

/// Normal-form count: at each vertex, monomials `∏ a_i^{e_i}` with `e_i`
/// below the power-relation length. `None` when some arrow kind has no
/// power relation at some vertex, where no normal form is available.
pub fn presentation_dimension(q: &QuiverPresentation) -> Option<u64> {
    count_monomials(q, None)
}

/// Like [`presentation_dimension`], but a missing power relation bounds its
/// exponent below `cut`, so the count is finite.
pub fn truncated_dimension(q: &QuiverPresentation, cut: u64) -> u64 {
    count_monomials(q, Some(cut)).expect("every exponent is bounded")
}

fn count_monomials(q: &QuiverPresentation, cut: Option<u64>) -> Option<u64> {
    let mut len: HashMap<(usize, usize), u64> = HashMap::new();
    for rel in &q.powers {
        let e = len.entry((rel.kind, rel.vertex)).or_insert(rel.length);
        *e = (*e).min(rel.length);
    }
    let mut total = 0u64;
    for v in 0..q.vertices.len() {
        let mut count = 1u64;
        for i in 0..q.arrow_types.len() {
            count *= len.get(&(i, v)).copied().or(cut)?;
        }
        total += count;
    }
    Some(total)
}

/// `g_{i,φ} w_i e_φ`, indexed like `q.arrows`.
pub fn arrow_elements(
    ta: &TwistedAlgebra,
    h: &ExtGroup,
    q: &QuiverPresentation,
    wb: &EigenBasisW,
    idem: &[Vec<Fe>],
) -> Vec<Vec<Fe>> {
    let w: Vec<Vec<Fe>> = wb.w.iter().map(|w| ta.embed_kp(w)).collect();
    q.arrows
        .iter()
        .map(|a| {
            let gw = ta.alg.mul(&ta.group_element(h, &a.g), &w[a.kind]);
            ta.alg.mul(&gw, &idem[a.source])
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraVerification {
    pub commutation_relations: usize,
    pub commutation_failures: Vec<String>,
    pub power_relations: usize,
    pub power_failures: Vec<String>,
    pub source_target: bool,
    pub arrows_nonzero: bool,
    pub q_inverse_pairs: bool,
    pub commutes_with_matrix_part: bool,
    pub commutation_with_matrix_failures: Vec<String>,
    pub span_rank: usize,
    pub presentation_dimension: Option<u64>,
    /// Normal-form count with unbounded exponents cut off, when some power
    /// relation is missing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncated_dimension: Option<(u64, u64)>,
    pub expected_dimension: u64,
    pub radical_dimension: usize,
    pub radical_nilpotent: bool,
    pub basic: bool,
}

impl AlgebraVerification {
    /// The first failed check as an error.
    pub fn check(&self) -> Result<()> {
        if let Some(f) = self
            .commutation_failures
            .first()
            .or(self.power_failures.first())
        {
            return Err(Error::RelationFails(f.clone()));
        }
        if !self.source_target || !self.arrows_nonzero || !self.q_inverse_pairs {
            return Err(Error::RelationFails(
                "source/target idempotents or q-inverse pairing".into(),
            ));
        }
        let Some(normal_form) = self.presentation_dimension else {
            let (cut, count) = self.truncated_dimension.unwrap_or_default();
            return Err(Error::DimensionMismatch {
                what: format!("normal-form count (a power relation is missing; that exponent cut below {cut})"),
                expected: self.expected_dimension as usize,
                found: count as usize,
            });
        };
        if normal_form != self.span_rank as u64 || normal_form != self.expected_dimension {
            return Err(Error::DimensionMismatch {
                what: "span of the basic algebra against the normal-form count".into(),
                expected: normal_form as usize,
                found: self.span_rank,
            });
        }
        if let Some(f) = self.commutation_with_matrix_failures.first() {
            return Err(Error::CommutationFails(f.clone()));
        }
        if !self.basic {
            return Err(Error::RelationFails(
                "arrow ideal is not nilpotent of codimension #vertices".into(),
            ));
        }
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.check().is_ok()
    }
}

/// Everything needed to check a presentation inside `k(P⋊H)e`.
pub struct AlgebraContext<'a> {
    pub ta: &'a TwistedAlgebra,
    pub h: &'a ExtGroup,
    pub phis: &'a PhiFamily,
    pub wb: &'a EigenBasisW,
    pub idem: &'a [Vec<Fe>],
    pub mat_basis: &'a [Vec<Fe>],
    pub p_order: u64,
}

/// Span of all products of arrows and vertex idempotents.
pub fn basic_span<'f>(ta: &'f TwistedAlgebra, arrows: &[Vec<Fe>], idem: &[Vec<Fe>]) -> Echelon<'f> {
    let mut ech = Echelon::new(ta.field(), ta.dim());
    let mut frontier: Vec<Vec<Fe>> = Vec::new();
    for e in idem {
        if ech.insert(e.clone()) {
            frontier.push(e.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for a in arrows {
                let v = ta.alg.mul(a, u);
                if ech.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    ech
}

pub fn verify_in_algebra(
    q: &QuiverPresentation,
    g: &[Vec<HElem>],
    arrows: &[Vec<Fe>],
    cx: &AlgebraContext,
) -> Result<(AlgebraVerification, Vec<Vec<Fe>>)> {
    verify_relations(q, g, arrows, cx, false)
}

/// As [`verify_in_algebra`]; with `stop_early`, returns right after a failed
/// relation or a missing power relation, without computing the span.
pub fn verify_relations(
    q: &QuiverPresentation,
    g: &[Vec<HElem>],
    arrows: &[Vec<Fe>],
    cx: &AlgebraContext,
    stop_early: bool,
) -> Result<(AlgebraVerification, Vec<Vec<Fe>>)> {
    let ta = cx.ta;
    let f = ta.field();
    let alg = &ta.alg;
    let mut rep = AlgebraVerification {
        expected_dimension: cx.phis.len() as u64 * cx.p_order,
        ..Default::default()
    };
    for c in &q.commutations {
        let vi = q.arrow(c.i, c.vertex).target;
        let vj = q.arrow(c.j, c.vertex).target;
        let lhs = alg.mul(
            &arrows[q.arrow_index(c.j, vi)],
            &arrows[q.arrow_index(c.i, c.vertex)],
        );
        let rhs = alg.mul(
            &arrows[q.arrow_index(c.i, vj)],
            &arrows[q.arrow_index(c.j, c.vertex)],
        );
        let scalar = f.embed(&c.q)?;
        if lhs != linalg::scale(f, scalar, &rhs) {
            rep.commutation_failures.push(format!(
                "a_{}a_{} = {} a_{}a_{} at {}",
                c.j + 1,
                c.i + 1,
                c.q,
                c.i + 1,
                c.j + 1,
                q.vertices[c.vertex].label
            ));
        }
        rep.commutation_relations += 1;
    }
    for pw in &q.powers {
        let mut acc = arrows[pw.path[0]].clone();
        for &a in &pw.path[1..] {
            acc = alg.mul(&arrows[a], &acc);
        }
        if !linalg::is_zero(&acc) {
            rep.power_failures.push(format!(
                "a_{}^{} != 0 at {}",
                pw.kind + 1,
                pw.length,
                q.vertices[pw.vertex].label
            ));
        }
        rep.power_relations += 1;
    }
    rep.source_target = q
        .arrows
        .iter()
        .zip(arrows)
        .all(|(a, x)| alg.mul(&alg.mul(&cx.idem[a.target], x), &cx.idem[a.source]) == *x);
    rep.arrows_nonzero = arrows.iter().all(|x| !linalg::is_zero(x));
    rep.q_inverse_pairs = true;
    for c in &q.commutations {
        let back = compute_q(cx.h, cx.phis, &cx.wb.psi, g, c.j, c.i, c.vertex)?;
        rep.q_inverse_pairs &= back.q.mul(&c.q).is_one();
    }
    rep.presentation_dimension = presentation_dimension(q);
    if rep.presentation_dimension.is_none() {
        let cut = q.powers.iter().map(|p| p.length).max().unwrap_or(1) + 1;
        rep.truncated_dimension = Some((cut, truncated_dimension(q, cut)));
    }
    let failed = !rep.commutation_failures.is_empty() || !rep.power_failures.is_empty();
    if stop_early && (failed || rep.presentation_dimension.is_none()) {
        return Ok((rep, Vec::new()));
    }
    for (k, a) in arrows.iter().enumerate() {
        for (n, m) in cx.mat_basis.iter().enumerate() {
            if !linalg::is_zero(&alg.commutator(a, m)) {
                rep.commutation_with_matrix_failures
                    .push(format!("arrow {k} and matrix basis element {n}"));
                break;
            }
        }
    }
    rep.commutes_with_matrix_part = rep.commutation_with_matrix_failures.is_empty();
    let span = basic_span(ta, arrows, cx.idem);
    rep.span_rank = span.rank();
    let basis: Vec<Vec<Fe>> = span.rows().to_vec();
    // I_k = span of paths of length ≥ k. As I_{k-1} is stable under the
    // e_φ, multiplying by Σ_φ a_{i,φ} gives the same span as every a_{i,φ}.
    let r = q.arrow_types.len();
    let kind_sums: Vec<Vec<Fe>> = (0..r)
        .map(|i| {
            let mut s = linalg::zeros(ta.dim());
            for v in 0..q.vertices.len() {
                s = linalg::add(f, &s, &arrows[q.arrow_index(i, v)]);
            }
            s
        })
        .collect();
    let mut level = basis.clone();
    let mut first = None;
    loop {
        let mut ech = Echelon::new(f, ta.dim());
        for u in &level {
            for a in &kind_sums {
                ech.insert(alg.mul(a, u));
            }
        }
        let next = ech.rows().to_vec();
        if first.is_none() {
            first = Some(next.len());
        }
        if next.is_empty() {
            rep.radical_nilpotent = true;
            break;
        }
        if next.len() == level.len() {
            break;
        }
        level = next;
    }
    rep.radical_dimension = first.unwrap_or(0);
    rep.basic = rep.radical_nilpotent && rep.span_rank - rep.radical_dimension == q.vertices.len();
    Ok((rep, basis))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorVerification {
    pub basic_dimension: usize,
    pub matrix_dimension: usize,
    pub algebra_dimension: usize,
    pub product_rank: usize,
    pub matrix_degree: u64,
}

impl TensorVerification {
    pub fn check(&self) -> Result<()> {
        if self.basic_dimension * self.matrix_dimension != self.algebra_dimension {
            return Err(Error::DimensionMismatch {
                what: "dim(basic) · dim(matrix part)".into(),
                expected: self.algebra_dimension,
                found: self.basic_dimension * self.matrix_dimension,
            });
        }
        if self.product_rank != self.algebra_dimension {
            return Err(Error::SpanDeficient {
                rank: self.product_rank,
                dim: self.algebra_dimension,
            });
        }
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.check().is_ok()
    }
}

/// Rank of `{a·m}` over bases of `𝔄` and `𝔐`; full rank means
/// `𝔄 ⊗ 𝔐 → k(P⋊H)e` is onto, hence an isomorphism when dimensions match.
pub fn verify_tensor_decomposition(
    ta: &TwistedAlgebra,
    basic: &[Vec<Fe>],
    mat: &[Vec<Fe>],
    degree: u64,
) -> TensorVerification {
    let mut ech = Echelon::new(ta.field(), ta.dim());
    'outer: for a in basic {
        for m in mat {
            ech.insert(ta.alg.mul(a, m));
            if ech.is_full() {
                break 'outer;
            }
        }
    }
    TensorVerification {
        basic_dimension: basic.len(),
        matrix_dimension: mat.len(),
        algebra_dimension: ta.dim(),
        product_rank: ech.rank(),
        matrix_degree: degree,
    }
}

/// Multiplies the `q` of relation `index` by a nontrivial scalar of the
/// field with generator `order`; returns false when no nontrivial scalar
/// exists.
pub fn perturb_q(q: &mut QuiverPresentation, index: usize, unit_order: u64) -> bool {
    if unit_order < 2 || index >= q.commutations.len() {
        return false;
    }
    let c = &mut q.commutations[index];
    c.q = c.q.mul(&RootScalar::new(unit_order, 1)).normalized();
    true
}

/// Drops power relation `index`.
pub fn omit_power_relation(q: &mut QuiverPresentation, index: usize) -> bool {
    if index >= q.powers.len() {
        return false;
    }
    q.powers.remove(index);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;
    use crate::cocycle::AlternatingForm;
    use crate::field::FieldSpec;
    use crate::group_algebra::{build_eigenbasis, build_mat_subalgebra, ActionTable};
    use crate::pgroup::{Component, LAction, PGroupData};
    use std::sync::Arc;

    struct Built {
        q: QuiverPresentation,
        ver: AlgebraVerification,
        tensor: TensorVerification,
    }

    fn run(
        p: u64,
        comps: Vec<(u32, usize)>,
        l: Vec<u64>,
        mats: Vec<Vec<Vec<Vec<i64>>>>,
        form: &[(usize, usize, u64, i64)],
        fault: Option<&str>,
    ) -> Result<Built> {
        let pg = PGroupData::new(
            p,
            comps
                .into_iter()
                .map(|(n, r)| Component {
                    exponent: n,
                    rank: r,
                })
                .collect(),
        )?;
        let l = FinAbGroup::new(l);
        let act = LAction::new(&pg, l.clone(), mats)?;
        let e: Vec<_> = form
            .iter()
            .map(|&(i, j, n, k)| (i, j, RootScalar::new(n, k)))
            .collect();
        let h = ExtGroup::build(&AlternatingForm::new(&l, &e)?)?;
        let phis = PhiFamily::build(&h)?;
        let mut orders = vec![h.m(), l.exponent()];
        orders.extend(phis.value_orders());
        let f = Arc::new(FieldSpec::make(p, &orders)?);
        let table = ActionTable::new(&pg, &act);
        let wb = build_eigenbasis(&pg, &act, &table, &f)?;
        let ta = TwistedAlgebra::build(&table, &h, f.clone())?;
        let idem: Vec<Vec<Fe>> = (0..phis.len()).map(|v| ta.e_phi(&h, &phis, v)).collect();
        let (mat, _) = build_mat_subalgebra(&ta, &h, &phis, &idem)?;
        let (mut q, g) = emit_presentation(&h, &phis, &wb, p)?;
        let arrows = arrow_elements(&ta, &h, &q, &wb, &idem);
        match fault {
            Some("q") => assert!(perturb_q(&mut q, 0, f.unit_order())),
            Some("power") => assert!(omit_power_relation(&mut q, 0)),
            _ => {}
        }
        let cx = AlgebraContext {
            ta: &ta,
            h: &h,
            phis: &phis,
            wb: &wb,
            idem: &idem,
            mat_basis: &mat,
            p_order: pg.order(),
        };
        let (ver, basis) = verify_in_algebra(&q, &g, &arrows, &cx)?;
        let degree = ((h.order() / h.center_order()) as f64).sqrt().round() as u64;
        let tensor = verify_tensor_decomposition(&ta, &basis, &mat, degree);
        Ok(Built { q, ver, tensor })
    }

    fn quantum_plane(fault: Option<&str>) -> Result<Built> {
        run(
            5,
            vec![(1, 2)],
            vec![4, 4],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 2]]],
            ],
            &[(0, 1, 4, 1)],
            fault,
        )
    }

    #[test]
    fn quantum_plane_presentation() {
        let b = quantum_plane(None).unwrap();
        assert_eq!(b.q.vertices.len(), 1);
        assert_eq!(b.q.arrows.len(), 2);
        assert_eq!(b.q.commutations.len(), 1);
        assert_eq!(b.q.commutations[0].q.exact_order(), 4);
        assert!(b.q.powers.iter().all(|p| p.length == 5));
        assert_eq!(presentation_dimension(&b.q), Some(25));
        b.ver.check().unwrap();
        assert_eq!(b.ver.span_rank, 25);
        assert_eq!(b.ver.radical_dimension, 24);
        b.tensor.check().unwrap();
        assert_eq!(b.tensor.matrix_dimension, 16);
        assert_eq!(b.tensor.matrix_degree, 4);
    }

    #[test]
    fn s3_presentation() {
        let b = run(
            3,
            vec![(1, 1)],
            vec![2],
            vec![vec![vec![vec![2]]]],
            &[],
            None,
        )
        .unwrap();
        assert_eq!(b.q.vertices.len(), 2);
        assert_eq!(b.q.arrows.len(), 2);
        assert_eq!(b.q.arrows[0].target, 1);
        assert_eq!(b.q.arrows[1].target, 0);
        assert_eq!(presentation_dimension(&b.q), Some(6));
        b.ver.check().unwrap();
        assert_eq!(b.ver.radical_dimension, 4);
        b.tensor.check().unwrap();
    }

    #[test]
    fn elementary_two_group_presentation() {
        let a = vec![
            vec![0, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let c = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 1],
        ];
        let b = run(
            2,
            vec![(1, 4)],
            vec![3, 3],
            vec![vec![a], vec![c]],
            &[(0, 1, 3, 1)],
            None,
        )
        .unwrap();
        assert_eq!(b.q.vertices.len(), 1);
        assert_eq!(b.q.arrows.len(), 4);
        assert_eq!(b.q.commutations.len(), 6);
        assert!(b.q.powers.iter().all(|p| p.length == 2));
        b.ver.check().unwrap();
        assert_eq!(b.ver.span_rank, 16);
        b.tensor.check().unwrap();
    }

    #[test]
    fn degenerate_form_two_vertices() {
        let b = run(
            5,
            vec![(1, 2)],
            vec![4, 2],
            vec![
                vec![vec![vec![2, 0], vec![0, 1]]],
                vec![vec![vec![1, 0], vec![0, 4]]],
            ],
            &[(0, 1, 2, 1)],
            None,
        )
        .unwrap();
        assert_eq!(b.q.vertices.len(), 2);
        b.ver.check().unwrap();
        assert_eq!(b.ver.span_rank, 50);
        b.tensor.check().unwrap();
    }

    #[test]
    fn higher_exponent_component() {
        // P = C_9, L = C_2 by inversion, and P = C_9 x C_3 with L = C_2
        let b = run(
            3,
            vec![(2, 1)],
            vec![2],
            vec![vec![vec![vec![8]]]],
            &[],
            None,
        )
        .unwrap();
        assert!(b.q.powers.iter().all(|p| p.length == 9));
        b.ver.check().unwrap();
        assert_eq!(b.ver.span_rank, 18);
        let b = run(
            3,
            vec![(2, 1), (1, 1)],
            vec![2],
            vec![vec![vec![vec![8]], vec![vec![2]]]],
            &[],
            None,
        )
        .unwrap();
        b.ver.check().unwrap();
        assert_eq!(b.ver.span_rank, 54);
    }

    #[test]
    fn faults_are_detected() {
        let b = quantum_plane(Some("q")).unwrap();
        assert!(matches!(b.ver.check(), Err(Error::RelationFails(_))));
        let b = quantum_plane(Some("power")).unwrap();
        assert_eq!(presentation_dimension(&b.q), None);
        assert!(matches!(
            b.ver.check(),
            Err(Error::DimensionMismatch {
                expected: 25,
                found: 30,
                ..
            })
        ));
    }

    #[test]
    fn json_round_trip() {
        let b = quantum_plane(None).unwrap();
        let s = serde_json::to_string(&b.q).unwrap();
        let back: QuiverPresentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b.q);
    }
}
