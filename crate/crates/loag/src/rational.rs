use num_bigint::BigInt;
use num_rational::BigRational;

/// Reduced arbitrary-precision rational. `BigRational` keeps the
/// denominator positive and the fraction in lowest terms after every
/// arithmetic operation, so structural equality is value equality.
pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `-3`, `7` or `-1/2` (whitespace around `/` allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
