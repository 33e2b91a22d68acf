//! Irreducible characters of the class-2 group `H` lying over a faithful
//! character of `Z`: induced from a maximal isotropic subgroup, of degree
//! `√|H:Z(H)|`, and zero off the center.
//!
//!     cargo run --example class_two_characters

use twisted_block::abelian::FinAbGroup;
use twisted_block::class2::Class2Characters;
use twisted_block::cocycle::AlternatingForm;
use twisted_block::extension::{ExtGroup, PhiFamily};
use twisted_block::scalar::RootScalar;

fn describe(orders: Vec<u64>, entries: &[(usize, usize, RootScalar)]) -> twisted_block::Result<()> {
    let l = FinAbGroup::new(orders.clone());
    let h = ExtGroup::build(&AlternatingForm::new(&l, entries)?)?;
    let phis = PhiFamily::build(&h)?;
    let ch = Class2Characters::build(&h, &phis)?;
    println!(
        "L = {orders:?}, |H| = {}, |Z(H)| = {}",
        h.order(),
        h.center_order()
    );
    println!(
        "  isotropic subgroup of order {}, degree {}",
        ch.isotropic.order(),
        ch.degree
    );
    let off_center = h.elements().filter(|g| !h.in_center(g)).count();
    for (v, tau) in ch.tau.iter().enumerate() {
        let zeros = h
            .elements()
            .filter(|g| !h.in_center(g) && ch.ring.is_zero(&tau[h.index(g)]))
            .count();
        let induced = ch.induced_linear(&phis, v);
        println!(
            "  tau_{v}: <tau, tau> = {:?}, <phi induced, tau> = {:?}, zero on {zeros}/{off_center} noncentral elements",
            ch.inner(tau, tau),
            ch.inner(&induced, tau)
        );
    }
    let r = ch.verify(&phis);
    println!("  all identities hold: {}", r.passed());
    Ok(())
}

fn main() -> twisted_block::Result<()> {
    describe(vec![4, 4], &[(0, 1, RootScalar::new(4, 1))])?;
    describe(vec![4, 2], &[(0, 1, RootScalar::new(2, 1))])?;
    describe(vec![3, 3, 3], &[(0, 1, RootScalar::new(3, 1))])?;
    Ok(())
}
