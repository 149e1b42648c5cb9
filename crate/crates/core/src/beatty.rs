//! Exact Beatty sequences: the golden-ratio pair and rational pairs in the
//! `⌊(n - δ)/α⌋`, `⌊(n - γ)/β⌋` form.

use std::cmp::Ordering;
use std::fmt;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use thiserror::Error;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BeattyError {
    #[error("integer overflow evaluating {0}")]
    Overflow(String),
    #[error("sequence is not strictly increasing at index {index}: {prev} then {next}")]
    NotIncreasing { index: usize, prev: i128, next: i128 },
    #[error("modulus {0} must lie strictly between 0 and 1")]
    BadModulus(Rational),
    #[error("q must be at least 2, got {0}")]
    BadDenominator(i128),
}

/// Which of Wythoff's complementary sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `A_n = ⌊φ n⌋`
    A,
    /// `B_n = A_n + n`
    B,
}

/// `A_n` or `B_n`, via `A_n = (n + isqrt(5 n²)) div 2`.
pub fn golden(n: u128, which: Side) -> Result<u128, BeattyError> {
    let overflow = || BeattyError::Overflow(format!("golden({n})"));
    let sq = n
        .checked_mul(n)
        .and_then(|v| v.checked_mul(5))
        .ok_or_else(overflow)?;
    let a = (n + sq.sqrt()) / 2;
    match which {
        Side::A => Ok(a),
        Side::B => a.checked_add(n).ok_or_else(overflow),
    }
}

/// Sign of `x/y - φ` for `y > 0`, using `x² - xy - y²`.
pub fn cmp_ratio_phi(x: u64, y: u64) -> Ordering {
    assert!(y > 0, "denominator must be positive");
    let (x, y) = (x as i128, y as i128);
    (x * x - x * y).cmp(&(y * y))
}

/// Euler's totient by trial factorisation.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// A pair of rational Beatty sequences `⌊(n - δ)/α⌋` and `⌊(n - γ)/β⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeattyPair {
    alpha: Rational,
    delta: Rational,
    gamma: Rational,
}

impl BeattyPair {
    /// `beta` is implied as `1 - alpha`.
    pub fn new(alpha: Rational, delta: Rational, gamma: Rational) -> Result<Self, BeattyError> {
        if alpha <= Rational::from_integer(0) || alpha >= Rational::from_integer(1) {
            return Err(BeattyError::BadModulus(alpha));
        }
        Ok(BeattyPair {
            alpha,
            delta,
            gamma,
        })
    }

    /// The pair with `α = p/q`, `δ = t/q`, `γ = (1 - t)/q`.
    pub fn from_offset_index(p: i128, q: i128, t: i128) -> Result<Self, BeattyError> {
        if q < 2 {
            return Err(BeattyError::BadDenominator(q));
        }
        BeattyPair::new(Ratio::new(p, q), Ratio::new(t, q), Ratio::new(1 - t, q))
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    pub fn beta(&self) -> Rational {
        Rational::from_integer(1) - self.alpha
    }

    pub fn delta(&self) -> Rational {
        self.delta
    }

    pub fn gamma(&self) -> Rational {
        self.gamma
    }

    /// Least `q` with `q α` integral.
    pub fn q(&self) -> i128 {
        *self.alpha.denom()
    }

    /// Class label of the ornament game: the numerator of the modulus
    /// `1/α` written in lowest terms, which is `q`.
    pub fn class(&self) -> i128 {
        self.q()
    }

    /// The same pair with the roles of the two sequences exchanged.
    pub fn swapped(&self) -> Self {
        BeattyPair {
            alpha: self.beta(),
            delta: self.gamma,
            gamma: self.delta,
        }
    }

    /// `n`-th term (`n >= 1`) of the `α` side (`first`) or the `β` side.
    pub fn term(&self, first: bool, n: i128) -> i128 {
        let (modulus, offset) = if first {
            (self.alpha, self.delta)
        } else {
            (self.beta(), self.gamma)
        };
        ((Rational::from_integer(n) - offset) / modulus).floor().to_integer()
    }

    /// Terms `n = 1, 2, ...` while they stay at or below `bound`.
    pub fn terms_up_to(&self, first: bool, bound: i128) -> Vec<i128> {
        let mut out = Vec::new();
        let mut n = 1;
        loop {
            let t = self.term(first, n);
            if t > bound {
                return out;
            }
            out.push(t);
            n += 1;
        }
    }

    /// Closed-form complementarity test for rational pairs.
    pub fn is_complementary(&self) -> bool {
        let one = Rational::from_integer(1);
        let q = Rational::from_integer(self.q());
        let s = self.alpha + self.delta;
        let lower_ok = one / q <= s && s <= one;
        let ceil_sum = (q * self.delta).ceil() + (q * self.gamma).ceil();
        lower_ok && ceil_sum == one
    }

    /// Canonical representative under the swap symmetry.
    fn canonical(&self) -> (Rational, Rational, Rational) {
        let a = (self.alpha, self.delta, self.gamma);
        let s = self.swapped();
        let b = (s.alpha, s.delta, s.gamma);
        if a <= b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for BeattyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} delta={} beta={} gamma={}",
            self.alpha,
            self.delta,
            self.beta(),
            self.gamma
        )
    }
}

/// Whether two increasing sequences of positive integers, cut at `bound`,
/// partition `[1, bound]`.
///
/// A term below 1 makes the answer `false`: the sequences are then not
/// sequences of positive integers.
pub fn brute_complementary(a: &[i128], b: &[i128], bound: i128) -> Result<bool, BeattyError> {
    for seq in [a, b] {
        if let Some(i) = seq
            .windows(2)
            .position(|w| w[0] <= bound && w[1] <= bound && w[0] >= w[1])
        {
            return Err(BeattyError::NotIncreasing {
                index: i + 1,
                prev: seq[i],
                next: seq[i + 1],
            });
        }
    }
    if a.iter().chain(b).any(|&t| t < 1) {
        return Ok(false);
    }
    let mut seen = vec![false; bound.max(0) as usize + 1];
    for &t in a.iter().chain(b).filter(|&&t| t <= bound) {
        let slot = &mut seen[t as usize];
        if *slot {
            return Ok(false);
        }
        *slot = true;
    }
    Ok(seen[1..].iter().all(|&s| s))
}

/// Brute-force check of a pair at `bound`.
pub fn brute_check_pair(pair: &BeattyPair, bound: i128) -> bool {
    let a = pair.terms_up_to(true, bound);
    let b = pair.terms_up_to(false, bound);
    // both sides have modulus > 1, so they are strictly increasing
    brute_complementary(&a, &b, bound).expect("Beatty terms increase")
}

/// All complementary pairs with denominator `q` and offsets `t/q`, one per
/// swap class, ordered by `(p, t)`.
pub fn enumerate_ornament_pairs(q: i128) -> Result<Vec<BeattyPair>, BeattyError> {
    if q < 2 {
        return Err(BeattyError::BadDenominator(q));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for p in (1..q).filter(|p| p.gcd(&q) == 1) {
        for t in (1 - p)..=(q - p) {
            let pair = BeattyPair::from_offset_index(p, q, t)?;
            debug_assert!(pair.is_complementary());
            if seen.insert(pair.canonical()) {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

/// Closed-form count `C (φ(C) + 1) / 2` next to the enumerated count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrnamentCount {
    pub class: i128,
    pub formula: Rational,
    pub enumerated: usize,
}

pub fn count_formula(c: i128) -> Result<OrnamentCount, BeattyError> {
    if c < 2 {
        return Err(BeattyError::BadDenominator(c));
    }
    let phi = euler_phi(c as u64) as i128;
    Ok(OrnamentCount {
        class: c,
        formula: Ratio::new(c * (phi + 1), 2),
        enumerated: enumerate_ornament_pairs(c)?.len(),
    })
}
