//! Test-only oracles, written without reference to the library's own
//! constructors or determinant engines.
#![allow(dead_code)]

use fibhess::{Poly, Ring, SquareMatrix};
use num_bigint::BigInt;
use rand::Rng;

/// Fibonacci numbers by plain iteration, extended to negative indices by
/// running the recurrence backwards.
pub fn fib(k: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    if k >= 0 {
        for _ in 0..k {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    } else {
        // (a, b) = (F_j, F_{j+1}); step to (F_{j-1}, F_j)
        for _ in 0..(-k) {
            let prev = &b - &a;
            b = std::mem::replace(&mut a, prev);
        }
        a
    }
}

pub fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

pub fn lin(slope: BigInt, intercept: BigInt) -> Poly {
    Poly::new(vec![intercept, slope])
}

/// Leibniz expansion over all permutations.
pub fn leibniz<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = R::zero();
    permute(&mut perm, 0, rows, &mut total);
    total
}

fn permute<R: Ring>(perm: &mut Vec<usize>, k: usize, rows: &[Vec<R>], total: &mut R) {
    if k == perm.len() {
        let mut inversions = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = R::one();
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&rows[i][j]);
        }
        *total = if inversions % 2 == 0 {
            total.add(&term)
        } else {
            total.sub(&term)
        };
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, rows, total);
        perm.swap(k, i);
    }
}

/// Rows of the seven `t`-families, written out from their defining rules.
pub fn family_rows(name: char, n: usize) -> Vec<Vec<Poly>> {
    let (first, sup, alternating) = match name {
        'C' => (2, 1, false),
        'D' => (2, -1, false),
        'E' => (1, -1, false),
        'F' => (2, -1, true),
        'G' => (1, -1, true),
        'H' => (1, 1, true),
        'K' => (2, 1, true),
        _ => panic!("no family {name}"),
    };
    let mut rows: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Poly::constant(2)
                    } else if j == i + 1 {
                        Poly::constant(sup)
                    } else if j < i {
                        let sign = if alternating && (i + j) % 2 == 1 {
                            -1
                        } else {
                            1
                        };
                        Poly::constant(sign)
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        })
        .collect();
    rows[n - 1][n - 1] = p("t+1");
    if first == 1 {
        rows[0][0] = Poly::constant(1);
    }
    rows
}

pub fn rows_of<R: Ring>(m: &SquareMatrix<R>) -> Vec<Vec<R>> {
    m.rows().map(|r| r.to_vec()).collect()
}

pub fn lorentz_rows(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    let mut acc = Poly::zero();
                    for j in 0..n {
                        let term = &a[i][j] * &b[j][k];
                        acc = if j == 0 { &acc - &term } else { &acc + &term };
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(lo..=hi))).unwrap()
}

/// Random lower-Hessenberg integer matrix: zeros strictly above the superdiagonal.
pub fn random_hessenberg(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> SquareMatrix<BigInt> {
    SquareMatrix::from_fn(n, |i, j| {
        if j > i + 1 {
            BigInt::from(0)
        } else {
            BigInt::from(rng.gen_range(lo..=hi))
        }
    })
    .unwrap()
}
