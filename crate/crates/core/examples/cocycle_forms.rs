//! Forms, cocycles and their twists on `L = C₄²` in characteristic 3.
//! The twist by `y ↦ y³` fixes the form, while `α ↦ α^(3)` inverts it: the
//! single Frobenius twist is not cohomologous. Twisting by `y ↦ y⁹` and
//! `α ↦ α^(9)` agree.
//!
//!     cargo run --example cocycle_forms

use twisted_block::abelian::FinAbGroup;
use twisted_block::cocycle::{AlternatingForm, Cocycle2, LAutomorphism};
use twisted_block::extension::ExtGroup;
use twisted_block::scalar::RootScalar;

fn show(name: &str, f: &AlternatingForm) {
    println!("{name:<22} t_12 = {}", f.value(0, 1));
}

fn main() -> twisted_block::Result<()> {
    let p = 3;
    let l = FinAbGroup::new(vec![4, 4]);
    let tau = AlternatingForm::new(&l, &[(0, 1, RootScalar::new(4, 1))])?;
    let alpha = Cocycle2::from_form(&tau);
    show("form of alpha", &alpha.form());
    println!("radical of the form has order {}", tau.radical().order());

    for q in [p, p * p] {
        let psi = LAutomorphism::power(&l, q as i64)?;
        let twisted = alpha.twist(&psi).form();
        let frob = alpha.frobenius_twist(q)?.form();
        show(&format!("^psi alpha, q = {q}"), &twisted);
        show(&format!("alpha^({q})"), &frob);
        println!("  cohomologous: {}", twisted == frob);
    }

    // the central extension H built from the form
    let h = ExtGroup::build(&tau)?;
    h.verify_structure()?;
    println!(
        "|Z| = {}, |H| = {}, |Z(H)| = {}, |H:Z(H)| = {}",
        h.m(),
        h.order(),
        h.center_order(),
        h.order() / h.center_order()
    );
    let (x, y) = (h.lift(&l.generator(0)), h.lift(&l.generator(1)));
    let c = h.commutator(&x, &y);
    println!(
        "[x, y] central: {}, chi([x, y]) = {}",
        h.is_central(&c),
        h.chi(c.z)
    );
    Ok(())
}
