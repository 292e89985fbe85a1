use num_bigint::BigInt;

/// Arbitrary-precision rational, always stored in reduced canonical form
/// (gcd(|num|, den) = 1, den > 0). `BigRational` maintains exactly this
/// invariant, and its `Display`/`FromStr` use the "p/q" (or "p") convention
/// the file formats rely on, so we use it directly.
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as a rational, reduced on construction.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}
