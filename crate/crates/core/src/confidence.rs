//! Confidence arithmetic over exact rationals.
//!
//! A confidence is a single rational in `[0,1]`: 1 is perfect confidence,
//! 0 is no information (not falsehood). Everything here is exact so that
//! worked values such as 0.504 or 0.86112 compare bit-equal in tests.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rational in the unit interval. Construction enforces `0 <= r <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Confidence(BigRational);

impl Confidence {
    pub const fn raw(r: BigRational) -> Self {
        Confidence(r)
    }

    /// Build from a rational, rejecting values outside `[0,1]`.
    pub fn new(r: BigRational) -> Option<Self> {
        if r.is_negative() || r > BigRational::one() {
            None
        } else {
            Some(Confidence(r))
        }
    }

    pub fn one() -> Self {
        Confidence(BigRational::one())
    }

    pub fn zero() -> Self {
        Confidence(BigRational::zero())
    }

    /// `numer/denom`, e.g. `Confidence::ratio(63, 125)` for 0.504.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Confidence::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
            .expect("ratio outside [0,1]")
    }

    /// Parse a decimal literal such as `0.85` or `1`.
    pub fn from_decimal(text: &str) -> Option<Self> {
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let mut numer: BigInt = if int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let mut denom = BigInt::one();
        for c in frac_part.chars() {
            numer = numer * 10 + (c as u8 - b'0');
            denom *= 10;
        }
        Confidence::new(BigRational::new(numer, denom))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_certain(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn product(&self, other: &Confidence) -> Confidence {
        Confidence(&self.0 * &other.0)
    }

    /// Nearest f64, after rounding to six decimal places.
    pub fn to_f64_rounded(&self) -> f64 {
        let scale = BigRational::from_integer(BigInt::from(1_000_000));
        let rounded = (&self.0 * &scale).round() / scale;
        rounded.to_f64().unwrap_or(0.0)
    }

    /// Fixed six-decimal rendering, e.g. `0.504000`.
    pub fn to_decimal_6(&self) -> String {
        let scaled = (&self.0 * BigRational::from_integer(BigInt::from(1_000_000))).round();
        let units = scaled.to_integer();
        let whole = &units / 1_000_000;
        let frac = (&units % 1_000_000).abs();
        format!("{whole}.{frac:06}")
    }

    /// Exact `numer/denom` form.
    pub fn to_exact_string(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    /// Shortest exact decimal if the reduced denominator is of the form
    /// `2^a * 5^b`; used when writing clauses back in the input syntax.
    pub fn to_decimal_exact(&self) -> Option<String> {
        let mut denom = self.0.denom().clone();
        let mut twos = 0u32;
        let mut fives = 0u32;
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        while (&denom % &two).is_zero() {
            denom /= &two;
            twos += 1;
        }
        while (&denom % &five).is_zero() {
            denom /= &five;
            fives += 1;
        }
        if !denom.is_one() {
            return None;
        }
        let digits = twos.max(fives);
        let mut scale = BigInt::one();
        for _ in 0..digits {
            scale *= 10;
        }
        let scaled = (self.0.numer() * &scale) / self.0.denom();
        if digits == 0 {
            return Some(scaled.to_string());
        }
        let whole = &scaled / &scale;
        let frac = (&scaled % &scale).abs();
        let frac_str = format!("{:0width$}", frac, width = digits as usize);
        let frac_str = frac_str.trim_end_matches('0');
        if frac_str.is_empty() {
            Some(whole.to_string())
        } else {
            Some(format!("{whole}.{frac_str}"))
        }
    }
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_decimal_exact() {
            Some(d) => write!(f, "{d}"),
            None => write!(f, "{}", self.to_exact_string()),
        }
    }
}

/// Sign of a combined answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Positive => write!(f, "positive"),
            Sign::Negative => write!(f, "negative"),
        }
    }
}

/// Independence of two derivations from their non-question input clause
/// id sets: `1 - |shared| / |total|` with the total taken as the union.
/// Two empty sets count as fully dependent.
pub fn pairwise_independence<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> Confidence {
    let union = a.union(b).count();
    if union == 0 {
        return Confidence::zero();
    }
    let shared = a.intersection(b).count();
    Confidence(
        BigRational::one()
            - BigRational::new(BigInt::from(shared), BigInt::from(union)),
    )
}

/// Cumulative confidence of two derivations of the same result:
/// `max(c1 + c2*i*h - c1*c2*i*h, c1*i*h + c2 - c1*c2*i*h)`.
///
/// With `i*h = 1` this is noisy-or, with `i*h = 0` it degrades to max.
pub fn cumulative_pair(
    c1: &Confidence,
    c2: &Confidence,
    i: &Confidence,
    h: &Confidence,
) -> Confidence {
    let ih = &i.0 * &h.0;
    let joint = &c1.0 * &c2.0 * &ih;
    let left = &c1.0 + &c2.0 * &ih - &joint;
    let right = &c1.0 * &ih + &c2.0 - &joint;
    Confidence(if left >= right { left } else { right })
}

/// One derivation's contribution to an evidence pool.
#[derive(Debug, Clone)]
pub struct EvidenceEntry<T: Ord + Clone> {
    pub confidence: Confidence,
    /// Non-question input clause ids of the derivation.
    pub inputs: BTreeSet<T>,
}

/// Fold a set of derivations of the same answer into one confidence.
///
/// Entries are taken in descending confidence order; each new entry is
/// weighed against the union of the input sets folded so far.
pub fn cumulative_confidence<T: Ord + Clone>(
    entries: &[EvidenceEntry<T>],
    h: &Confidence,
) -> Confidence {
    let mut sorted: Vec<&EvidenceEntry<T>> = entries.iter().collect();
    sorted.sort_by(|a, b| match b.confidence.cmp(&a.confidence) {
        Ordering::Equal => a.inputs.cmp(&b.inputs),
        other => other,
    });
    let mut iter = sorted.into_iter();
    let first = match iter.next() {
        Some(e) => e,
        None => return Confidence::zero(),
    };
    let mut acc = first.confidence.clone();
    let mut pool: BTreeSet<T> = first.inputs.clone();
    for entry in iter {
        let i = pairwise_independence(&pool, &entry.inputs);
        acc = cumulative_pair(&acc, &entry.confidence, &i, h);
        pool.extend(entry.inputs.iter().cloned());
    }
    acc
}

/// Combine positive and negative cumulative confidences into a signed
/// answer: `cp - cn`, negated when below zero.
pub fn combine_sign(cp: &Confidence, cn: &Confidence) -> (Sign, Confidence) {
    let diff = &cp.0 - &cn.0;
    if diff.is_negative() {
        (Sign::Negative, Confidence(-diff))
    } else {
        (Sign::Positive, Confidence(diff))
    }
}
