use proptest::prelude::*;

use twisted_block::instances::{self, Bounds};
use twisted_block::pipeline::{Instance, Level, Options};
use twisted_block::problem::{self, Problem};
use twisted_block::quiver::{compute_q, presentation_dimension};
use twisted_block::report::{present, PresentationReport};

fn small() -> Bounds {
    Bounds {
        max_product: 200,
        ..Bounds::default()
    }
}

fn quick(seed: Option<u64>) -> Options {
    Options {
        level: Level::Quick,
        seed,
        ..Options::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn toml_round_trip(seed in any::<u64>()) {
        for file in instances::random(seed, 4, &small()) {
            let back = problem::parse_str(&file.to_toml()).unwrap();
            prop_assert_eq!(back.file, file);
        }
    }

    #[test]
    fn q_values_pair_up(seed in any::<u64>()) {
        let file = instances::random(seed, 1, &small()).remove(0);
        let inst = Instance::build(Problem::from_file(file).unwrap(), quick(None)).unwrap();
        let q = &inst.presentation;
        let unit = inst.field.unit_order();
        for c in &q.commutations {
            let back = compute_q(&inst.h, &inst.phis, &inst.wb.psi, &inst.g, c.j, c.i, c.vertex).unwrap();
            prop_assert!(back.q.mul(&c.q).is_one());
            prop_assert_eq!(unit % c.q.exact_order(), 0);
        }
        prop_assert_eq!(presentation_dimension(q), Some(inst.expected_basic_dimension()));
        let v = inst.verify().unwrap();
        prop_assert!(v.passed(), "{:?}", v.check());
    }

    #[test]
    fn report_json_round_trip(seed in any::<u64>()) {
        let file = instances::random(seed, 1, &small()).remove(0);
        let inst = Instance::build(Problem::from_file(file).unwrap(), quick(None)).unwrap();
        let rep = present(&inst, false).unwrap();
        let text = rep.to_json();
        let back = PresentationReport::from_json(&text).unwrap();
        prop_assert_eq!(&back.presentation, &inst.presentation);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn seed_does_not_change_the_answer(seed in any::<u64>(), a in 0u64..1000, b in 0u64..1000) {
        let file = instances::random(seed, 1, &small()).remove(0);
        let pr = Problem::from_file(file).unwrap();
        let x = Instance::build(pr.clone(), quick(Some(a))).unwrap();
        let y = Instance::build(pr, quick(Some(b))).unwrap();
        prop_assert_eq!(x.presentation.vertices.len(), y.presentation.vertices.len());
        prop_assert_eq!(x.presentation.arrows.len(), y.presentation.arrows.len());
        prop_assert_eq!(presentation_dimension(&x.presentation), presentation_dimension(&y.presentation));
        let mut qx: Vec<u64> = x.presentation.commutations.iter().map(|c| c.q.exact_order()).collect();
        let mut qy: Vec<u64> = y.presentation.commutations.iter().map(|c| c.q.exact_order()).collect();
        qx.sort_unstable();
        qy.sort_unstable();
        prop_assert_eq!(qx, qy);
        prop_assert!(y.frobenius().unwrap().check().is_ok());
    }
}
