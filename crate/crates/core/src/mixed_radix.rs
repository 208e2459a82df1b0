//! Exact positional arithmetic over a mixed radix chain `b = (b_1, .., b_r)`.
//!
//! Place values are the partial products `B_k = b_1 * .. * b_k`, so a number
//! `y < H = B_r` has the unique digit string `y = y_1 + y_2 B_1 + .. + y_r B_{r-1}`
//! with `y_k < b_k`. Digits are stored least significant first.
//!
//! [`flip`] reverses the first `k` digits and reads the result back in the
//! prefix-reversed base [`BaseVector::bflip`]. With all radices equal to 2 this
//! is plain bit reversal. Equidistant integers (step `B_{k-1}`) map to
//! consecutive integers, which is what turns periodic occurrences into
//! contiguous rectangles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A harmonic radix chain with cached partial products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct BaseVector {
    radices: Vec<u64>,
    // prefix[k] = b_1 * .. * b_k, prefix[0] = 1
    prefix: Vec<u64>,
}

impl BaseVector {
    /// Builds a base vector. Rejects an empty chain, zero radices and chains
    /// whose product `H` does not fit in a `u64`.
    pub fn new(radices: Vec<u64>) -> Result<Self> {
        if radices.is_empty() {
            return Err(Error::Validation("base vector must have at least one radix".into()));
        }
        let mut prefix = Vec::with_capacity(radices.len() + 1);
        prefix.push(1u64);
        for (idx, &b) in radices.iter().enumerate() {
            if b == 0 {
                return Err(Error::range("radix", b, format!(">= 1 at position {}", idx + 1)));
            }
            let last = *prefix.last().expect("prefix is never empty");
            let next = last.checked_mul(b).ok_or_else(|| {
                Error::Overflow(format!("partial product B_{} exceeds u64", idx + 1))
            })?;
            prefix.push(next);
        }
        Ok(BaseVector { radices, prefix })
    }

    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    /// Number of levels `r`.
    pub fn len(&self) -> usize {
        self.radices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radices.is_empty()
    }

    /// Radix `b_k`, 1-based.
    pub fn radix(&self, k: usize) -> Result<u64> {
        self.check_level(k)?;
        Ok(self.radices[k - 1])
    }

    /// `B_k = b_1 * .. * b_k` for `0 <= k <= r`, with `B_0 = 1`.
    pub fn partial_product(&self, k: usize) -> Result<u64> {
        self.prefix
            .get(k)
            .copied()
            .ok_or_else(|| Error::range("level", k as u64, format!("0..={}", self.len())))
    }

    /// `H = B_r`.
    pub fn hyper(&self) -> u64 {
        self.prefix[self.len()]
    }

    /// Reverses the first `k` radices: `(b_k, .., b_1, b_{k+1}, .., b_r)`.
    pub fn bflip(&self, k: usize) -> Result<BaseVector> {
        self.check_level(k)?;
        let mut radices = self.radices.clone();
        radices[..k].reverse();
        // Same multiset of radices, so the product cannot overflow.
        BaseVector::new(radices)
    }

    fn check_level(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.len() {
            return Err(Error::range("level", k as u64, format!("1..={}", self.len())));
        }
        Ok(())
    }

    fn check_value(&self, y: u64) -> Result<()> {
        if y >= self.hyper() {
            return Err(Error::range("value", y, format!("0..{}", self.hyper())));
        }
        Ok(())
    }
}

impl TryFrom<Vec<u64>> for BaseVector {
    type Error = Error;

    fn try_from(radices: Vec<u64>) -> Result<Self> {
        BaseVector::new(radices)
    }
}

impl From<BaseVector> for Vec<u64> {
    fn from(base: BaseVector) -> Self {
        base.radices
    }
}

impl fmt::Display for BaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.radices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Digits `y_1, .., y_r` of a number in a given base, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    digits: Vec<u64>,
    base: BaseVector,
}

impl DigitString {
    /// Validates that there is one digit per radix and `y_k < b_k`.
    pub fn new(digits: Vec<u64>, base: BaseVector) -> Result<Self> {
        if digits.len() != base.len() {
            return Err(Error::Validation(format!(
                "{} digits given for a base of length {}",
                digits.len(),
                base.len()
            )));
        }
        for (idx, (&d, &b)) in digits.iter().zip(base.radices()).enumerate() {
            if d >= b {
                return Err(Error::range("digit", d, format!("0..{b} at position {}", idx + 1)));
            }
        }
        Ok(DigitString { digits, base })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn base(&self) -> &BaseVector {
        &self.base
    }
}

/// `B_k` of `base`. Same as [`BaseVector::partial_product`].
pub fn partial_product(base: &BaseVector, k: usize) -> Result<u64> {
    base.partial_product(k)
}

/// Splits `0 <= y < H` into its mixed radix digits.
pub fn decompose(y: u64, base: &BaseVector) -> Result<DigitString> {
    base.check_value(y)?;
    let mut rest = y;
    let digits = base
        .radices()
        .iter()
        .map(|&b| {
            let d = rest % b;
            rest /= b;
            d
        })
        .collect();
    Ok(DigitString {
        digits,
        base: base.clone(),
    })
}

/// Evaluates a digit string: `y_1 + y_2 B_1 + .. + y_r B_{r-1}`.
pub fn compose(digits: &DigitString) -> u64 {
    digits
        .digits
        .iter()
        .zip(&digits.base.prefix)
        .map(|(&d, &place)| d * place)
        .sum()
}

/// `bflip(b, k)`. Same as [`BaseVector::bflip`].
pub fn bflip(base: &BaseVector, k: usize) -> Result<BaseVector> {
    base.bflip(k)
}

/// Reverses the first `k` digits of `y` in `base` and returns the value of the
/// result in `bflip(base, k)`.
///
/// Digits above position `k` keep their place values (`B_k` is invariant under
/// the prefix reversal), so only `y mod B_k` is rewritten.
pub fn flip(y: u64, k: usize, base: &BaseVector) -> Result<u64> {
    base.check_level(k)?;
    base.check_value(y)?;
    Ok(flip_unchecked(y, k, base))
}

/// [`flip`] without range checks; `k` and `y` must already be valid.
#[inline]
pub(crate) fn flip_unchecked(y: u64, k: usize, base: &BaseVector) -> u64 {
    let block = base.prefix[k];
    let mut low = y % block;
    // Horner over y_1, y_2, .., y_k yields y_k + y_{k-1} b_k + .. + y_1 b_2..b_k.
    let mut acc = 0u64;
    for &b in &base.radices[..k] {
        acc = acc * b + low % b;
        low /= b;
    }
    y - y % block + acc
}
