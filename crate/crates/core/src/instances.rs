//! Named instances and a seeded generator of random ones.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::gcd;
use crate::field::FieldSpec;
use crate::pgroup::Component;
use crate::problem::{FormEntry, Problem, ProblemFile};

fn comp(exponent: u32, rank: usize) -> Component {
    Component { exponent, rank }
}

/// `P = C₃`, `L = C₂` by inversion, trivial form: the block of `kS₃`.
pub fn ks3() -> ProblemFile {
    ProblemFile {
        p: 3,
        seed: Some(0),
        components: vec![comp(1, 1)],
        l_orders: vec![2],
        actions: vec![vec![vec![vec![2]]]],
        form: vec![],
    }
}

/// `P = C₅²`, `L = C₄²` acting diagonally, form `ζ₄`.
pub fn quantum_plane() -> ProblemFile {
    ProblemFile {
        p: 5,
        seed: Some(0),
        components: vec![comp(1, 2)],
        l_orders: vec![4, 4],
        actions: vec![
            vec![vec![vec![2, 0], vec![0, 1]]],
            vec![vec![vec![1, 0], vec![0, 2]]],
        ],
        form: vec![FormEntry {
            i: 1,
            j: 2,
            order: 4,
            exponent: 1,
        }],
    }
}

/// `P = (C₂)⁴`, `L = C₃²`, each generator acting by an order 3 block on its
/// own pair of coordinates, form `ζ₃`.
pub fn elementary_two_group() -> ProblemFile {
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
    ProblemFile {
        p: 2,
        seed: Some(0),
        components: vec![comp(1, 4)],
        l_orders: vec![3, 3],
        actions: vec![vec![a], vec![b]],
        form: vec![FormEntry {
            i: 1,
            j: 2,
            order: 3,
            exponent: 1,
        }],
    }
}

/// `P = C₅²`, `L = C₄ × C₂`, form of order 2: a degenerate form with
/// two vertices.
pub fn degenerate() -> ProblemFile {
    ProblemFile {
        p: 5,
        seed: Some(0),
        components: vec![comp(1, 2)],
        l_orders: vec![4, 2],
        actions: vec![
            vec![vec![vec![2, 0], vec![0, 1]]],
            vec![vec![vec![1, 0], vec![0, 4]]],
        ],
        form: vec![FormEntry {
            i: 1,
            j: 2,
            order: 2,
            exponent: 1,
        }],
    }
}

/// `P = C₉`, `L = C₂` by inversion.
pub fn cyclic_nine() -> ProblemFile {
    ProblemFile {
        p: 3,
        seed: Some(0),
        components: vec![comp(2, 1)],
        l_orders: vec![2],
        actions: vec![vec![vec![vec![8]]]],
        form: vec![],
    }
}

pub fn golden() -> Vec<(&'static str, ProblemFile)> {
    vec![
        ("ks3", ks3()),
        ("quantum_plane", quantum_plane()),
        ("c2_4_c3_2", elementary_two_group()),
        ("degenerate", degenerate()),
        ("cyclic_nine", cyclic_nine()),
    ]
}

/// Bounds for [`random`].
#[derive(Clone, Debug)]
pub struct Bounds {
    pub primes: Vec<u64>,
    pub max_p_order: u64,
    pub max_l_order: u64,
    pub max_product: u64,
    /// Largest field size accepted.
    pub max_field: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            primes: vec![2, 3, 5],
            max_p_order: 128,
            max_l_order: 64,
            max_product: 400,
            max_field: 1 << 12,
        }
    }
}

type Mat = Vec<Vec<i64>>;

/// Blocks of order dividing `o` over any `Z/p^n` with `p ∤ o`: companions
/// of `x²+x+1`, `x²+1`, `x²-x+1`.
fn two_by_two(o: u64) -> Option<Mat> {
    match o {
        3 => Some(vec![vec![0, -1], vec![1, -1]]),
        4 => Some(vec![vec![0, -1], vec![1, 0]]),
        6 => Some(vec![vec![0, -1], vec![1, 1]]),
        _ => None,
    }
}

fn mat_pow(a: &Mat, k: u64, m: i64) -> Mat {
    let n = a.len();
    let mut out: Mat = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..k {
        out = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|l| out[i][l] * a[l][j])
                            .sum::<i64>()
                            .rem_euclid(m)
                    })
                    .collect()
            })
            .collect();
    }
    out
}

/// Units of `Z/m` of order dividing `d`.
fn roots_mod(m: u64, d: u64) -> Vec<i64> {
    (1..m)
        .filter(|&u| gcd(u, m) == 1)
        .filter(|&u| {
            let mut x = 1u64;
            for _ in 0..d {
                x = x * u % m;
            }
            x == 1
        })
        .map(|u| u as i64)
        .collect()
}

fn candidate(rng: &mut ChaCha8Rng, b: &Bounds) -> Option<ProblemFile> {
    let p = *b.primes.choose(rng)?;
    let l_choices: &[u64] = match p {
        2 => &[3],
        3 => &[2, 4],
        _ => &[2, 3, 4, 6],
    };
    let l_rank = *[1usize, 2, 2, 2, 3].choose(rng).unwrap();
    let l_orders: Vec<u64> = (0..l_rank)
        .map(|_| *l_choices.choose(rng).unwrap())
        .collect();
    let l_order: u64 = l_orders.iter().product();
    if l_order > b.max_l_order {
        return None;
    }
    // P: one or two homocyclic components
    let ncomp = rng.gen_range(1..=2);
    let mut components = Vec::new();
    let mut p_order = 1u64;
    for _ in 0..ncomp {
        let n = if p == 5 { 1 } else { rng.gen_range(1..=2) };
        let r = rng.gen_range(1..=3);
        p_order = p_order.checked_mul(p.pow(n * r as u32))?;
        components.push(comp(n, r));
    }
    if components.len() == 2 && components[0].exponent == components[1].exponent {
        components[0].rank += components[1].rank;
        components.pop();
    }
    if p_order > b.max_p_order || p_order * l_order > b.max_product {
        return None;
    }
    // each component splits into 1x1 and 2x2 blocks; on each block every
    // generator acts by a power of one fixed matrix, so the actions commute
    let mut actions: Vec<Vec<Mat>> = vec![Vec::new(); l_rank];
    for c in &components {
        let m = p.pow(c.exponent) as i64;
        let mut mats: Vec<Mat> = vec![vec![vec![0; c.rank]; c.rank]; l_rank];
        let mut at = 0;
        while at < c.rank {
            let wide = at + 1 < c.rank && rng.gen_bool(0.5);
            if wide {
                let o = *[3u64, 4, 6].choose(rng).unwrap();
                let base = two_by_two(o)?;
                for (j, &d) in l_orders.iter().enumerate() {
                    // exponents k with o | k·d
                    let ks: Vec<u64> = (0..o).filter(|k| (k * d) % o == 0).collect();
                    let k = *ks.choose(rng).unwrap();
                    let blk = mat_pow(&base, k, m);
                    for r in 0..2 {
                        for s in 0..2 {
                            mats[j][at + r][at + s] = blk[r][s];
                        }
                    }
                }
                at += 2;
            } else {
                for (j, &d) in l_orders.iter().enumerate() {
                    mats[j][at][at] = *roots_mod(m as u64, d).choose(rng).unwrap();
                }
                at += 1;
            }
        }
        for (j, mm) in mats.into_iter().enumerate() {
            actions[j].push(mm);
        }
    }
    let mut form = Vec::new();
    for i in 0..l_rank {
        for j in i + 1..l_rank {
            let g = gcd(l_orders[i], l_orders[j]);
            if g > 1 && rng.gen_bool(0.8) {
                form.push(FormEntry {
                    i: i + 1,
                    j: j + 1,
                    order: g,
                    exponent: rng.gen_range(1..g as i64),
                });
            }
        }
    }
    Some(ProblemFile {
        p,
        seed: Some(rng.gen_range(0..1000)),
        components,
        l_orders,
        actions,
        form,
    })
}

/// `count` valid instances within `bounds`, reproducible from `seed`.
/// Candidates that are unfaithful, too large, or need a field above
/// `bounds.max_field` are discarded.
pub fn random(seed: u64, count: usize, bounds: &Bounds) -> Vec<ProblemFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let Some(file) = candidate(&mut rng, bounds) else {
            continue;
        };
        let Ok(pr) = Problem::from_file(file.clone()) else {
            continue;
        };
        let exp = pr.l().exponent();
        let fits = FieldSpec::make(pr.p(), &[exp]).is_ok_and(|f| f.size() <= bounds.max_field);
        if fits {
            out.push(file);
        }
    }
    out
}
