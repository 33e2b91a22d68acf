//! Square matrices over `Z/m`.

pub type ModMat = Vec<Vec<u64>>;

pub fn identity(n: usize) -> ModMat {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

pub fn reduce(a: &[Vec<i64>], m: u64) -> ModMat {
    a.iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect())
        .collect()
}

pub fn mul(a: &ModMat, b: &ModMat, m: u64) -> ModMat {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter().zip(b).fold(0u128, |acc, (&x, r)| {
                        (acc + x as u128 * r[j] as u128) % m as u128
                    }) as u64
                })
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &ModMat, v: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(0u128, |acc, (&x, &y)| {
                (acc + x as u128 * y as u128) % m as u128
            }) as u64
        })
        .collect()
}

pub fn pow(a: &ModMat, mut k: u64, m: u64) -> ModMat {
    let mut acc = identity(a.len());
    let mut b = a.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &b, m);
        }
        b = mul(&b, &b, m);
        k >>= 1;
    }
    if m == 1 {
        acc.iter_mut().flatten().for_each(|x| *x = 0);
    }
    acc
}

pub fn is_identity(a: &ModMat, m: u64) -> bool {
    a.iter().enumerate().all(|(i, r)| {
        r.iter()
            .enumerate()
            .all(|(j, &x)| x % m == u64::from(i == j) % m)
    })
}

/// Inverse over `Z/p^n` (`m = p^n`), or `None` when singular mod `p`.
pub fn inverse(a: &ModMat, p: u64, m: u64) -> Option<ModMat> {
    let n = a.len();
    let mut w: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !w[i][c].is_multiple_of(p))?;
        w.swap(c, piv);
        let inv = crate::arith::mod_inv(w[c][c], m)?;
        for x in w[c].iter_mut() {
            *x = (*x as u128 * inv as u128 % m as u128) as u64;
        }
        for i in 0..n {
            if i != c && w[i][c] != 0 {
                let f = w[i][c];
                let pivot_row = w[c].clone();
                for (x, y) in w[i].iter_mut().zip(pivot_row) {
                    *x = ((*x as u128 + (m - f) as u128 * y as u128) % m as u128) as u64;
                }
            }
        }
    }
    Some(w.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Multiplicative order of an invertible matrix, searched up to `cap`.
pub fn order(a: &ModMat, m: u64, cap: u64) -> Option<u64> {
    let mut x = a.clone();
    for k in 1..=cap {
        if is_identity(&x, m) {
            return Some(k);
        }
        x = mul(&x, a, m);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_prime_power() {
        let a = reduce(&[vec![2, 1], vec![1, 1]], 9);
        let b = inverse(&a, 3, 9).unwrap();
        assert!(is_identity(&mul(&a, &b, 9), 9));
        assert!(inverse(&reduce(&[vec![3, 0], vec![0, 1]], 9), 3, 9).is_none());
        let r = reduce(&[vec![0, -1], vec![1, -1]], 4);
        assert_eq!(order(&r, 4, 100), Some(3));
        assert!(is_identity(&pow(&r, 3, 4), 4));
    }
}
