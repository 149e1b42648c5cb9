//! Fibonacci and Zeckendorf numeration on 128-bit integers.
//!
//! Fibonacci numbers use the indexing `F_0 = F_1 = 1`, `F_n = F_{n-1} + F_{n-2}`,
//! so the digit weights are `F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...`. A
//! [`FibWord`] stores its digits least-significant first (`digits[0]` carries
//! weight `F_1`) and renders most-significant first.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest index `i` with `F_i` representable in a `u128`.
pub const MAX_FIB_INDEX: usize = 185;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumerationError {
    #[error("integer overflow: {0} does not fit in 128 bits")]
    Overflow(String),
    #[error("digit {digit} at weight F_{index} is not binary")]
    NonBinaryDigit { index: usize, digit: u8 },
    #[error("zero has no trailing-zero count")]
    Zero,
    #[error("invalid Fibonacci word {0:?}")]
    Parse(String),
}

/// `F_i` with `F_0 = F_1 = 1`.
pub fn fib(i: usize) -> Result<u128, NumerationError> {
    let (mut prev, mut cur) = (1u128, 1u128);
    for _ in 1..i {
        let next = prev
            .checked_add(cur)
            .ok_or_else(|| NumerationError::Overflow(format!("F_{i}")))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Weights `F_1, F_2, ...` up to the largest one not exceeding `x`.
fn weights_up_to(x: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let (mut a, mut b) = (1u128, 2u128);
    while a <= x {
        out.push(a);
        match a.checked_add(b) {
            Some(c) => {
                a = b;
                b = c;
            }
            None => {
                if b <= x {
                    out.push(b);
                }
                break;
            }
        }
    }
    out
}

/// A word in Fibonacci numeration, least-significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FibWord {
    digits: Vec<u8>,
    normal: bool,
}

impl FibWord {
    /// Builds a word from digits given least-significant first. Leading
    /// (high) zero digits are trimmed.
    pub fn from_digits_lsf(mut digits: Vec<u8>) -> Self {
        while digits.last() == Some(&0) {
            digits.pop();
        }
        let normal = is_zeckendorf(&digits);
        FibWord { digits, normal }
    }

    /// Digits least-significant first; `digits()[i]` carries weight `F_{i+1}`.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_binary(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    /// Number of 0 digits below the lowest nonzero digit, `None` for the empty word.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d != 0)
    }

    /// Digit string with the lowest digit first, handy for suffix tests.
    fn ends_with(&self, suffix_msf: &str) -> bool {
        let n = suffix_msf.len();
        if self.digits.len() < n {
            return false;
        }
        suffix_msf
            .bytes()
            .rev()
            .zip(self.digits.iter())
            .all(|(c, &d)| (c - b'0') == d)
    }

    /// True if the word ends in `1 0^{2t+1} 1` for some `t >= 0`.
    pub fn ends_one_odd_zeros_one(&self) -> bool {
        self.digits.first() == Some(&1) && self.odd_gap_above(1)
    }

    /// True if the word ends in `1 0^{2s+1} 1 0` for some `s >= 0`.
    pub fn ends_one_odd_zeros_one_zero(&self) -> bool {
        self.digits.first() == Some(&0) && self.digits.get(1) == Some(&1) && self.odd_gap_above(2)
    }

    /// The next nonzero digit above position `from` (exclusive) is a 1
    /// separated from it by an odd number of zeros.
    fn odd_gap_above(&self, from: usize) -> bool {
        match self.digits[from..].iter().position(|&d| d != 0) {
            Some(gap) => gap % 2 == 1 && self.digits[from + gap] == 1,
            None => false,
        }
    }

    /// Suffix test against a most-significant-first pattern such as `"101001"`.
    pub fn has_suffix(&self, pattern: &str) -> bool {
        self.ends_with(pattern)
    }
}

fn is_zeckendorf(digits: &[u8]) -> bool {
    digits.iter().all(|&d| d <= 1) && digits.windows(2).all(|w| !(w[0] == 1 && w[1] == 1))
}

impl fmt::Display for FibWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.digits.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for FibWord {
    type Err = NumerationError;

    /// Parses a most-significant-first digit string; digits above 1 are allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .bytes()
            .rev()
            .map(|c| {
                if c.is_ascii_digit() {
                    Ok(c - b'0')
                } else {
                    Err(NumerationError::Parse(s.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FibWord::from_digits_lsf(digits))
    }
}

/// The Zeckendorf word of `x` (greedy).
pub fn zeckendorf(x: u128) -> FibWord {
    let weights = weights_up_to(x);
    let mut digits = vec![0u8; weights.len()];
    let mut rest = x;
    for (i, &w) in weights.iter().enumerate().rev() {
        if w <= rest {
            digits[i] = 1;
            rest -= w;
        }
    }
    debug_assert_eq!(rest, 0);
    FibWord::from_digits_lsf(digits)
}

/// Value of a (possibly carry-laden) word.
pub fn decode(w: &FibWord) -> Result<u128, NumerationError> {
    let overflow = || NumerationError::Overflow(w.to_string());
    let (mut a, mut b) = (1u128, 2u128);
    let mut total = 0u128;
    for (i, &d) in w.digits.iter().enumerate() {
        if d != 0 {
            let term = a.checked_mul(d as u128).ok_or_else(overflow)?;
            total = total.checked_add(term).ok_or_else(overflow)?;
        }
        if i + 1 < w.digits.len() {
            let c = a.checked_add(b).ok_or_else(overflow)?;
            a = b;
            b = c;
        }
    }
    Ok(total)
}

/// Rewrites a binary word into Zeckendorf form by repeatedly replacing the
/// leftmost `11` with `100`.
pub fn normalize(w: &FibWord) -> Result<FibWord, NumerationError> {
    if let Some((index, &digit)) = w.digits.iter().enumerate().find(|(_, &d)| d > 1) {
        return Err(NumerationError::NonBinaryDigit {
            index: index + 1,
            digit,
        });
    }
    let mut digits = w.digits.clone();
    loop {
        // highest position j with digits[j] == digits[j-1] == 1
        let hit = (1..digits.len())
            .rev()
            .find(|&j| digits[j] == 1 && digits[j - 1] == 1);
        let Some(j) = hit else { break };
        if j + 1 == digits.len() {
            digits.push(0);
        }
        // leftmost pair, so the digit above it is 0
        debug_assert_eq!(digits[j + 1], 0);
        digits[j + 1] = 1;
        digits[j] = 0;
        digits[j - 1] = 0;
    }
    Ok(FibWord::from_digits_lsf(digits))
}

/// Carry-laden words are normalized through their value.
pub fn normalize_general(w: &FibWord) -> Result<FibWord, NumerationError> {
    if w.is_binary() {
        normalize(w)
    } else {
        Ok(zeckendorf(decode(w)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Trailing-zero count of the Zeckendorf word of `x` and its parity.
pub fn trailing_zero_parity(x: u128) -> Result<(Parity, usize), NumerationError> {
    if x == 0 {
        return Err(NumerationError::Zero);
    }
    let tz = zeckendorf(x).trailing_zeros().expect("nonzero word");
    Ok((Parity::of(tz), tz))
}

/// Shorthand used by the Wythoff filters: the Zeckendorf word of `x >= 1`
/// ends in an even number of zeros.
pub fn ends_even(x: u128) -> bool {
    matches!(trailing_zero_parity(x), Ok((Parity::Even, _)))
}

/// Bit tables of trailing-zero facts for every integer below a limit.
///
/// Built by the recursion `tz(F_k + R) = tz(R)` for `0 < R < F_{k-1}` and
/// `tz(F_k) = k - 1`, so filling the table never calls [`zeckendorf`].
pub struct TrailingZeroTable {
    limit: usize,
    odd: Vec<u64>,
    zero: Vec<u64>,
}

impl TrailingZeroTable {
    /// Tables for `1 <= x < limit`.
    pub fn new(limit: usize) -> Self {
        let words = limit.div_ceil(64).max(1);
        let mut t = TrailingZeroTable {
            limit,
            odd: vec![0; words],
            zero: vec![0; words],
        };
        // (F_k, k)
        let (mut f, mut k) = (1usize, 1usize);
        let mut next = 2usize;
        while f < limit {
            let end = next.min(limit);
            for x in f..end {
                let (odd, zero) = if x == f {
                    ((k - 1) % 2 == 1, k == 1)
                } else {
                    let r = x - f;
                    (t.is_odd(r), t.is_zero(r))
                };
                if odd {
                    t.odd[x / 64] |= 1 << (x % 64);
                }
                if zero {
                    t.zero[x / 64] |= 1 << (x % 64);
                }
            }
            let sum = f + next;
            f = next;
            next = sum;
            k += 1;
        }
        t
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Trailing-zero count of `x` is odd.
    #[inline]
    pub fn is_odd(&self, x: usize) -> bool {
        self.odd[x / 64] >> (x % 64) & 1 == 1
    }

    /// Trailing-zero count of `x` is zero.
    #[inline]
    pub fn is_zero(&self, x: usize) -> bool {
        self.zero[x / 64] >> (x % 64) & 1 == 1
    }
}

pub mod lemmas {
    //! Exhaustive checks of the numeration lemmas behind the W⋆ results.

    use super::*;
    use crate::beatty::{golden, Side};
    use rand::Rng;
    use rand::SeedableRng;

    /// Outcome of one exhaustive check.
    #[derive(Debug, Clone, Default, PartialEq, Eq)]
    pub struct LemmaReport {
        pub name: &'static str,
        pub checked: u64,
        /// First few counterexamples, rendered.
        pub counterexamples: Vec<String>,
        pub counterexample_count: u64,
    }

    impl LemmaReport {
        fn new(name: &'static str) -> Self {
            LemmaReport {
                name,
                ..Default::default()
            }
        }

        fn fail(&mut self, msg: impl FnOnce() -> String) {
            self.counterexample_count += 1;
            if self.counterexamples.len() < 10 {
                self.counterexamples.push(msg());
            }
        }

        pub fn holds(&self) -> bool {
            self.counterexample_count == 0
        }
    }

    fn fib_usize(i: usize) -> usize {
        fib(i).expect("small index") as usize
    }

    /// Parity of trailing zeros survives random `100 -> 011` rewrites of the
    /// Zeckendorf word of every `x` in `1..=max_x`.
    pub fn parity_invariance(max_x: u128, rewrites: usize, seed: u64) -> LemmaReport {
        let mut rep = LemmaReport::new("parity-invariance");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for x in 1..=max_x {
            let z = zeckendorf(x);
            let want = Parity::of(z.trailing_zeros().unwrap());
            let mut digits = z.digits().to_vec();
            for _ in 0..rewrites {
                let sites: Vec<usize> = (2..digits.len())
                    .filter(|&i| digits[i] == 1 && digits[i - 1] == 0 && digits[i - 2] == 0)
                    .collect();
                if sites.is_empty() {
                    break;
                }
                let i = sites[rng.gen_range(0..sites.len())];
                digits[i] = 0;
                digits[i - 1] = 1;
                digits[i - 2] = 1;
            }
            let w = FibWord::from_digits_lsf(digits);
            rep.checked += 1;
            let got = w.trailing_zeros().map(Parity::of);
            if decode(&w) != Ok(x) || got != Some(want) {
                rep.fail(|| format!("x={x} word={w}"));
            }
        }
        rep
    }

    /// `B_n` is `A_n` shifted by one digit and `A_n` ends in an even number of zeros.
    pub fn wythoff_codings(n_max: u128) -> LemmaReport {
        let mut rep = LemmaReport::new("wythoff-codings");
        for n in 1..=n_max {
            let a = golden(n, Side::A).expect("fits");
            let b = golden(n, Side::B).expect("fits");
            let za = zeckendorf(a);
            let zb = zeckendorf(b);
            let shifted = format!("{za}0");
            rep.checked += 1;
            if zb.to_string() != shifted || za.trailing_zeros().unwrap() % 2 != 0 {
                rep.fail(|| format!("n={n} A={a}:{za} B={b}:{zb}"));
            }
        }
        rep
    }

    /// Both clauses of the `F_{2n} - 1 - X` lemma for `2 <= n <= n_max`.
    pub fn fib_minus_one(n_max: usize, table: &TrailingZeroTable) -> LemmaReport {
        let mut rep = LemmaReport::new("fib-minus-one");
        for n in 2..=n_max {
            let f = fib_usize(2 * n);
            assert!(f <= table.limit(), "table too small for n={n}");
            for x in 1..f {
                let xi = f - 1 - x;
                if table.is_odd(x) {
                    rep.checked += 1;
                    if xi == 0 || !table.is_odd(xi) {
                        rep.fail(|| format!("n={n} X={x}: odd clause"));
                    }
                } else if !table.is_zero(x) {
                    rep.checked += 1;
                    if xi == 0 || !table.is_zero(xi) {
                        rep.fail(|| format!("n={n} X={x}: positive-even clause"));
                    }
                }
            }
        }
        rep
    }

    /// First clause of the `F_{2n-1} - X` lemma for `2 <= n <= n_max`.
    pub fn fib_minus_x(n_max: usize, table: &TrailingZeroTable) -> LemmaReport {
        let mut rep = LemmaReport::new("fib-minus-x");
        for n in 2..=n_max {
            let f = fib_usize(2 * n - 1);
            assert!(f <= table.limit(), "table too small for n={n}");
            for x in 1..f {
                if table.is_odd(x) {
                    continue;
                }
                // ends in 1 0^{2t+1} 1: lowest digit set and the next one sits
                // an odd number of zeros higher, i.e. tz(x - 1) is even
                let excluded = table.is_zero(x) && x > 1 && !table.is_odd(x - 1);
                if excluded {
                    continue;
                }
                rep.checked += 1;
                if !table.is_odd(f - x) {
                    rep.fail(|| format!("n={n} X={x}"));
                }
            }
        }
        rep
    }

    /// Second clause of the `F_{2n-1} - X` lemma over all words of at most
    /// `max_len` digits.
    pub fn t_minus_x(max_len: usize) -> LemmaReport {
        let mut rep = LemmaReport::new("t-minus-x");
        let limit = fib_usize(max_len + 1);
        let words: Vec<FibWord> = (0..limit as u128).map(zeckendorf).collect();
        let ts: Vec<usize> = (1..limit)
            .filter(|&v| words[v].ends_one_odd_zeros_one())
            .collect();
        let xs: Vec<usize> = (1..limit)
            .filter(|&v| words[v].ends_one_odd_zeros_one_zero())
            .collect();
        let odd: Vec<bool> = words
            .iter()
            .map(|w| w.trailing_zeros().is_some_and(|t| t % 2 == 1))
            .collect();
        for &t in &ts {
            for &x in xs.iter().take_while(|&&x| x < t) {
                rep.checked += 1;
                if !odd[t - x] {
                    rep.fail(|| format!("T={t} X={x}"));
                }
            }
        }
        rep
    }

    /// `2 F_n = F_{n+1} + F_{n-2}` for `2 <= n <= n_max` and `2 F_1 = F_2`.
    pub fn fibrule(n_max: usize) -> LemmaReport {
        let mut rep = LemmaReport::new("fibrule");
        rep.checked += 1;
        if 2 * fib(1).unwrap() != fib(2).unwrap() {
            rep.fail(|| "n=1".into());
        }
        for n in 2..=n_max {
            rep.checked += 1;
            let lhs = 2 * fib(n).unwrap();
            let rhs = fib(n + 1).unwrap() + fib(n - 2).unwrap();
            if lhs != rhs {
                rep.fail(|| format!("n={n}"));
            }
        }
        rep
    }

    /// Sign of `num/den - φ` for `den > 0`, exact.
    fn cmp_phi(num: i128, den: i128) -> std::cmp::Ordering {
        debug_assert!(den > 0);
        if num <= 0 {
            return std::cmp::Ordering::Less;
        }
        (num * num - num * den).cmp(&(den * den))
    }

    /// How the `(r, s)` ranges of the golden-ratio bounds are covered.
    #[derive(Debug, Clone, Copy)]
    pub struct GoldenBoundsPlan {
        /// All pairs `(r, s)` are enumerated while `F_{2n-1}` is at most this.
        pub pairs_limit: u128,
        /// All `s` (with the extremal `r`) while `F_{2n-1}` is at most this.
        pub s_limit: u128,
        /// Beyond `s_limit`: this many `s` at each end of the range plus as
        /// many seeded random ones.
        pub sample: u128,
        pub seed: u64,
    }

    impl Default for GoldenBoundsPlan {
        fn default() -> Self {
            GoldenBoundsPlan {
                pairs_limit: 2_600,
                s_limit: 3_000_000,
                sample: 20_000,
                seed: 4,
            }
        }
    }

    fn s_values(hi: u128, plan: &GoldenBoundsPlan, rng: &mut impl Rng) -> Vec<u128> {
        // s in 0..hi
        if hi <= plan.s_limit {
            return (0..hi).collect();
        }
        let mut out: Vec<u128> = (0..plan.sample).collect();
        out.extend(hi - plan.sample..hi);
        out.extend((0..plan.sample).map(|_| rng.gen_range(0..hi)));
        out
    }

    /// `(F_{2n} - r)/(F_{2n-1} - s) > φ` for `0 <= r <= φ s`, and
    /// `(F_{2n+1} - r)/(F_{2n} - s) < φ` for `φ s <= r`, with `1 <= n <= n_max`.
    ///
    /// The ratio falls as `r` grows, so beyond the pair limit only the extremal
    /// `r` (`⌊φ s⌋`, resp. `⌈φ s⌉`) is tested for each `s`.
    pub fn golden_bounds(n_max: usize, plan: &GoldenBoundsPlan) -> LemmaReport {
        let mut rep = LemmaReport::new("golden-bounds");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(plan.seed);
        let floor_phi = |s: u128| if s == 0 { 0 } else { golden(s, Side::A).unwrap() };
        for n in 1..=n_max {
            // upper family
            let f_hi = fib(2 * n).unwrap() as i128;
            let f_lo = fib(2 * n - 1).unwrap();
            for s in s_values(f_lo, plan, &mut rng) {
                let den = f_lo as i128 - s as i128;
                let r_max = floor_phi(s);
                let rs: Vec<u128> = if f_lo <= plan.pairs_limit {
                    (0..=r_max).collect()
                } else {
                    vec![r_max]
                };
                for r in rs {
                    rep.checked += 1;
                    if cmp_phi(f_hi - r as i128, den) != std::cmp::Ordering::Greater {
                        rep.fail(|| format!("upper n={n} r={r} s={s}"));
                    }
                }
            }
        }
        for n in 0..=n_max {
            // lower family
            let f_hi = fib(2 * n + 1).unwrap() as i128;
            let f_lo = fib(2 * n).unwrap();
            for s in s_values(f_lo, plan, &mut rng) {
                let den = f_lo as i128 - s as i128;
                let r_min = if s == 0 { 0 } else { floor_phi(s) + 1 };
                let rs: Vec<u128> = if f_lo <= plan.pairs_limit {
                    (r_min..=(f_hi as u128 + 1)).collect()
                } else {
                    vec![r_min]
                };
                for r in rs {
                    rep.checked += 1;
                    if cmp_phi(f_hi - r as i128, den) != std::cmp::Ordering::Less {
                        rep.fail(|| format!("lower n={n} r={r} s={s}"));
                    }
                }
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fib_indexing() {
        assert_eq!(fib(0), Ok(1));
        assert_eq!(fib(1), Ok(1));
        assert_eq!(fib(2), Ok(2));
        assert_eq!(fib(3), Ok(3));
        assert_eq!(fib(4), Ok(5));
        assert_eq!(fib(12), Ok(233));
        assert!(fib(MAX_FIB_INDEX).is_ok());
        assert!(matches!(fib(MAX_FIB_INDEX + 1), Err(NumerationError::Overflow(_))));
    }

    #[test]
    fn f12_minus_one_word() {
        let w: FibWord = "10101010101".parse().unwrap();
        assert_eq!(decode(&w), Ok(232));
        assert_eq!(decode(&w).unwrap(), fib(12).unwrap() - 1);
        assert_eq!(zeckendorf(232), w);
    }

    #[test]
    fn zeckendorf_examples() {
        assert_eq!(zeckendorf(19).to_string(), "101001");
        assert_eq!(zeckendorf(0).to_string(), "");
        assert!(zeckendorf(0).is_empty());
        assert_eq!(zeckendorf(129).to_string(), "1010001001");
        assert_eq!(zeckendorf(362).to_string(), "101010001001");
        for (x, w) in [(3, "100"), (8, "10000"), (11, "10100"), (21, "1000000"), (32, "1010100")] {
            assert_eq!(zeckendorf(x).to_string(), w);
        }
        // F_12 + F_6 + F_4 + F_2
        let w: FibWord = "100000101010".parse().unwrap();
        assert_eq!(decode(&w).unwrap(), 233 + 13 + 5 + 2);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&"100".parse().unwrap()), Ok(3));
        assert_eq!(decode(&"11".parse().unwrap()), Ok(3));
        assert_eq!(decode(&"1010100".parse().unwrap()), Ok(32));
        assert!(!"11".parse::<FibWord>().unwrap().is_normal());
        // carry-laden words from the lemma manipulations
        assert_eq!(
            decode(&"1201010101".parse().unwrap()),
            decode(&"10101010101".parse().unwrap())
        );
        assert_eq!(
            decode(&"1111120101".parse().unwrap()),
            decode(&"10101010101".parse().unwrap())
        );
    }

    #[test]
    fn decode_overflow() {
        let mut digits = vec![0u8; 190];
        digits[189] = 1;
        assert!(matches!(
            decode(&FibWord::from_digits_lsf(digits)),
            Err(NumerationError::Overflow(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let n = |s: &str| normalize(&s.parse().unwrap()).unwrap().to_string();
        assert_eq!(n("11"), "100");
        assert_eq!(n("101001"), "101001");
        assert_eq!(n("1011"), "10000");
        assert_eq!(n("111"), "1001");
        assert!(matches!(
            normalize(&"102".parse().unwrap()),
            Err(NumerationError::NonBinaryDigit { index: 1, digit: 2 })
        ));
        assert_eq!(
            normalize_general(&"1112010101".parse().unwrap()).unwrap(),
            zeckendorf(232)
        );
    }

    #[test]
    fn trailing_zero_examples() {
        assert_eq!(trailing_zero_parity(1), Ok((Parity::Even, 0)));
        assert_eq!(trailing_zero_parity(3), Ok((Parity::Even, 2)));
        assert_eq!(trailing_zero_parity(2), Ok((Parity::Odd, 1)));
        assert_eq!(trailing_zero_parity(0), Err(NumerationError::Zero));
        for n in 1..=500 {
            let a = crate::beatty::golden(n, crate::beatty::Side::A).unwrap();
            assert_eq!(trailing_zero_parity(a).unwrap().0, Parity::Even, "A_{n}");
        }
    }

    #[test]
    fn suffix_patterns() {
        let w = |s: &str| s.parse::<FibWord>().unwrap();
        assert!(w("101").ends_one_odd_zeros_one());
        assert!(w("10001").ends_one_odd_zeros_one());
        assert!(w("1010001").ends_one_odd_zeros_one());
        assert!(!w("1001").ends_one_odd_zeros_one());
        assert!(!w("1").ends_one_odd_zeros_one());
        assert!(!w("1010").ends_one_odd_zeros_one());
        assert!(w("1010").ends_one_odd_zeros_one_zero());
        assert!(w("1000010").has_suffix("0010"));
        assert!(!w("10010").ends_one_odd_zeros_one_zero());
        assert!(zeckendorf(19).has_suffix("101001"));
        assert!(zeckendorf(129).has_suffix("001001"));
    }

    #[test]
    fn round_trip_first_million() {
        for x in 0..=1_000_000u128 {
            let z = zeckendorf(x);
            assert!(z.is_normal());
            assert_eq!(decode(&z), Ok(x));
        }
    }

    #[test]
    fn trailing_zero_table_matches_words() {
        let t = TrailingZeroTable::new(50_000);
        for x in 1..50_000usize {
            let tz = zeckendorf(x as u128).trailing_zeros().unwrap();
            assert_eq!(t.is_odd(x), tz % 2 == 1, "x={x}");
            assert_eq!(t.is_zero(x), tz == 0, "x={x}");
        }
    }

    #[test]
    fn lemma_suite_small() {
        assert!(lemmas::parity_invariance(2_000, 4, 1).holds());
        assert!(lemmas::wythoff_codings(500).holds());
        let t = TrailingZeroTable::new(fib(20).unwrap() as usize + 1);
        assert!(lemmas::fib_minus_one(10, &t).holds());
        assert!(lemmas::fib_minus_x(10, &t).holds());
        assert!(lemmas::t_minus_x(14).holds());
        assert!(lemmas::fibrule(80).holds());
        let plan = lemmas::GoldenBoundsPlan {
            s_limit: 10_000,
            sample: 100,
            ..Default::default()
        };
        assert!(lemmas::golden_bounds(12, &plan).holds());
    }

    proptest! {
        #[test]
        fn normalize_preserves_value(bits in proptest::collection::vec(0u8..=1, 0..60)) {
            let w = FibWord::from_digits_lsf(bits);
            let n = normalize(&w).unwrap();
            prop_assert!(n.is_normal());
            prop_assert_eq!(decode(&n), decode(&w));
            prop_assert_eq!(n.trailing_zeros().map(|t| t % 2), w.trailing_zeros().map(|t| t % 2));
        }

        #[test]
        fn normal_words_round_trip(x in 0u128..(1u128 << 100)) {
            let z = zeckendorf(x);
            let back = decode(&z).unwrap();
            prop_assert_eq!(back, x);
            prop_assert_eq!(zeckendorf(back), z.clone());
            prop_assert_eq!(z.to_string().parse::<FibWord>().unwrap(), z);
        }
    }
}
