use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fibonacci number `F_n` with `F_1 = F_2 = 1`, defined for every integer
/// index via `F_{-n} = (-1)^{n+1} F_n`.
pub fn fib(n: i64) -> BigInt {
    let f = fib_pair(n.unsigned_abs()).0;
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// Lucas-type number with the seeds `L_1 = 2`, `L_2 = 1` and
/// `L_n = L_{n-1} + L_{n-2}` for every integer index.
///
/// With these seeds the sequence is the classical Lucas sequence shifted
/// by one place, so `L_n = F_{n-2} + F_n`.
pub fn lucas(n: i64) -> BigInt {
    fib(n - 2) + fib(n)
}

// (F_k, F_{k+1}) by fast doubling.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    if k == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(k / 2);
    let two_b_minus_a = (&b << 1) - &a;
    let c = &a * &two_b_minus_a;
    let d = &a * &a + &b * &b;
    if k.is_multiple_of(2) {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}
