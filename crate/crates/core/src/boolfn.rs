//! Boolean functions of small arity as packed truth tables.
//!
//! Input vectors are read as integers with `x_1` in the least significant bit,
//! so `eval_index(i)` is `f(i & 1, i >> 1 & 1, ...)`. The same convention is used
//! everywhere a tuple of graphs is evaluated.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ensure_size, Error, Result};

pub const MAX_ARITY: usize = 8;

/// Largest arity accepted by [`enumerate_functions`].
pub const MAX_ENUMERATION_ARITY: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    arity: u8,
    table: [u64; 4],
}

impl BooleanFunction {
    /// Builds a function of arity `k ≤ 6` from its truth table read as an integer.
    pub fn from_table(k: usize, table: u64) -> Result<BooleanFunction> {
        ensure_size("arity for a single-word table", k, 6)?;
        let len = 1usize << k;
        if len < 64 && table >> len != 0 {
            return Err(Error::MalformedInput {
                offset: 0,
                message: format!("truth table {table:#x} is longer than {len} bits"),
            });
        }
        Ok(BooleanFunction {
            arity: k as u8,
            table: [table, 0, 0, 0],
        })
    }

    /// Builds a function of any arity up to 8 from four little-endian table words.
    pub fn from_words(k: usize, words: [u64; 4]) -> Result<BooleanFunction> {
        ensure_size("arity", k, MAX_ARITY)?;
        let mut f = BooleanFunction { arity: k as u8, table: [0; 4] };
        for i in 0..f.table_len() {
            if words[i / 64] >> (i % 64) & 1 == 1 {
                f.table[i / 64] |= 1 << (i % 64);
            }
        }
        if f.table != words {
            return Err(Error::MalformedInput {
                offset: 0,
                message: format!("truth table is longer than {} bits", f.table_len()),
            });
        }
        Ok(f)
    }

    /// Tabulates `eval(index)` over all `2^k` input indices.
    pub fn from_fn(k: usize, mut eval: impl FnMut(usize) -> bool) -> Result<BooleanFunction> {
        ensure_size("arity", k, MAX_ARITY)?;
        let mut f = BooleanFunction { arity: k as u8, table: [0; 4] };
        for i in 0..f.table_len() {
            if eval(i) {
                f.table[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(f)
    }

    pub fn constant(k: usize, value: bool) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |_| value)
    }

    /// The projection onto `x_i` (1-based).
    pub fn projection(k: usize, i: usize) -> Result<BooleanFunction> {
        if i == 0 || i > k {
            return Err(Error::OutOfRangeVariable(i));
        }
        BooleanFunction::from_fn(k, |x| x >> (i - 1) & 1 == 1)
    }

    pub fn identity() -> BooleanFunction {
        BooleanFunction::projection(1, 1).expect("arity 1")
    }

    pub fn and(k: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |x| x == (1 << k) - 1)
    }

    pub fn or(k: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |x| x != 0)
    }

    pub fn parity(k: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |x| x.count_ones() % 2 == 1)
    }

    pub fn majority(k: usize) -> Result<BooleanFunction> {
        BooleanFunction::from_fn(k, |x| 2 * x.count_ones() as usize > k)
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    #[inline]
    pub fn table_len(&self) -> usize {
        1 << self.arity
    }

    pub fn table_words(&self) -> [u64; 4] {
        self.table
    }

    /// The table as an integer; only meaningful for arity ≤ 6.
    pub fn table_u64(&self) -> u64 {
        self.table[0]
    }

    #[inline]
    pub fn eval_index(&self, i: usize) -> bool {
        self.table[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: x.len(),
            });
        }
        let idx = x.iter().enumerate().map(|(i, &b)| (b as usize) << i).sum();
        Ok(self.eval_index(idx))
    }

    pub fn negate(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.arity(), |i| !self.eval_index(i)).expect("same arity")
    }

    pub fn count_ones(&self) -> usize {
        self.table.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Algebraic normal form via the binary Möbius transform.
    pub fn anf(&self) -> AnfForm {
        let len = self.table_len();
        let mut t: Vec<bool> = (0..len).map(|i| self.eval_index(i)).collect();
        moebius(&mut t);
        AnfForm {
            arity: self.arity(),
            monomials: (0..len as u32).filter(|&m| t[m as usize]).collect(),
        }
    }

    pub fn from_anf(a: &AnfForm) -> Result<BooleanFunction> {
        ensure_size("arity", a.arity, MAX_ARITY)?;
        let len = 1usize << a.arity;
        let mut t = vec![false; len];
        for &m in &a.monomials {
            if m as usize >= len {
                let var = 32 - m.leading_zeros() as usize;
                return Err(Error::OutOfRangeVariable(var));
            }
            t[m as usize] ^= true;
        }
        moebius(&mut t);
        BooleanFunction::from_fn(a.arity, |i| t[i])
    }

    /// Whether flipping any input from 0 to 1 never turns the output from 1 to 0.
    pub fn is_monotone(&self) -> bool {
        (0..self.table_len()).all(|x| {
            !self.eval_index(x) || (0..self.arity()).all(|i| self.eval_index(x | 1 << i))
        })
    }

    /// Prime implicants of a monotone function: its minimal true points, as
    /// variable masks (bit `i-1` stands for `x_i`).
    pub fn monotone_dnf(&self) -> Result<Vec<u32>> {
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        Ok((0..self.table_len())
            .filter(|&x| self.eval_index(x) && (0..self.arity()).all(|i| x >> i & 1 == 0 || !self.eval_index(x & !(1 << i))))
            .map(|x| x as u32)
            .collect())
    }
}

fn moebius(t: &mut [bool]) {
    let len = t.len();
    let mut step = 1;
    while step < len {
        for x in 0..len {
            if x & step != 0 {
                t[x] ^= t[x ^ step];
            }
        }
        step <<= 1;
    }
}

impl fmt::Display for BooleanFunction {
    /// `"<arity>:0x<hex>"` with `ceil(2^k / 4)` hex digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.table_len().div_ceil(4);
        let mut hex = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let nibble = (self.table[d / 16] >> ((d % 16) * 4)) & 0xf;
            hex.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        write!(f, "{}:0x{}", self.arity, hex)
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |offset: usize, message: &str| Error::MalformedInput {
            offset,
            message: message.to_string(),
        };
        let colon = s.find(':').ok_or_else(|| bad(0, "expected <arity>:0x<hex>"))?;
        let k: usize = s[..colon].parse().map_err(|_| bad(0, "arity is not a number"))?;
        ensure_size("arity", k, MAX_ARITY)?;
        let rest = &s[colon + 1..];
        let hex = rest
            .strip_prefix("0x")
            .or_else(|| rest.strip_prefix("0X"))
            .ok_or_else(|| bad(colon + 1, "missing 0x prefix"))?;
        let start = colon + 3;
        if hex.is_empty() {
            return Err(bad(start, "empty truth table"));
        }
        let mut words = [0u64; 4];
        let len = 1usize << k;
        for (pos, ch) in hex.char_indices() {
            let nibble = ch.to_digit(16).ok_or_else(|| bad(start + pos, "not a hex digit"))? as u64;
            // shift the 256-bit accumulator left by one nibble
            if words[3] >> 60 != 0 {
                return Err(bad(start + pos, "truth table is too long"));
            }
            for w in (1..4).rev() {
                words[w] = words[w] << 4 | words[w - 1] >> 60;
            }
            words[0] = words[0] << 4 | nibble;
        }
        let f = BooleanFunction::from_words(k, words)
            .map_err(|_| bad(start, &format!("truth table is longer than {len} bits")))?;
        Ok(f)
    }
}

impl Serialize for BooleanFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BooleanFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// XOR of AND-monomials. Each monomial is a variable mask, bit `i-1` for `x_i`;
/// the empty mask is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnfForm {
    pub arity: usize,
    pub monomials: Vec<u32>,
}

impl AnfForm {
    /// Monomials as sorted 1-based variable lists.
    pub fn monomial_sets(&self) -> Vec<Vec<usize>> {
        self.monomials.iter().map(|&m| mask_to_vars(m)).collect()
    }

    pub fn has_constant(&self) -> bool {
        self.monomials.contains(&0)
    }
}

/// 1-based variable indices of a mask.
pub fn mask_to_vars(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Every function of arity `k` in increasing truth-table order.
pub fn enumerate_functions(k: usize) -> Result<impl Iterator<Item = BooleanFunction>> {
    ensure_size("arity for enumeration", k, MAX_ENUMERATION_ARITY)?;
    let count = 1u64 << (1 << k);
    Ok((0..count).map(move |t| BooleanFunction::from_table(k, t).expect("in range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    // evaluates an ANF directly from its monomials
    fn eval_anf(a: &AnfForm, x: usize) -> bool {
        a.monomials.iter().filter(|&&m| x as u32 & m == m).count() % 2 == 1
    }

    #[test]
    fn anf_examples() {
        let or = BooleanFunction::or(2).unwrap();
        assert_eq!(or.anf().monomial_sets(), vec![vec![1], vec![2], vec![1, 2]]);
        // hand check: OR = x1 ^ x2 ^ x1x2 on all four inputs
        for x in 0..4 {
            assert_eq!(eval_anf(&or.anf(), x), or.eval_index(x));
        }
        assert_eq!(BooleanFunction::projection(1, 1).unwrap().anf().monomial_sets(), vec![vec![1]]);
        assert!(BooleanFunction::constant(3, false).unwrap().anf().monomials.is_empty());
    }

    #[test]
    fn from_anf_examples() {
        let one = BooleanFunction::from_anf(&AnfForm { arity: 2, monomials: vec![0] }).unwrap();
        assert_eq!(one, BooleanFunction::constant(2, true).unwrap());
        let xor = BooleanFunction::from_anf(&AnfForm { arity: 2, monomials: vec![1, 2] }).unwrap();
        assert_eq!(xor, BooleanFunction::parity(2).unwrap());
        assert_eq!(
            BooleanFunction::from_anf(&AnfForm { arity: 2, monomials: vec![4] }),
            Err(Error::OutOfRangeVariable(3))
        );
    }

    #[test]
    fn anf_round_trip_exhaustive_small_arity() {
        for k in 0..=3 {
            for f in enumerate_functions(k).unwrap() {
                let a = f.anf();
                for x in 0..f.table_len() {
                    assert_eq!(eval_anf(&a, x), f.eval_index(x));
                }
                assert_eq!(BooleanFunction::from_anf(&a).unwrap(), f);
            }
        }
    }

    #[test]
    fn anf_of_arity_eight() {
        let maj = BooleanFunction::majority(8).unwrap();
        let a = maj.anf();
        assert_eq!(BooleanFunction::from_anf(&a).unwrap(), maj);
        for x in (0..256).step_by(7) {
            assert_eq!(eval_anf(&a, x), maj.eval_index(x));
        }
    }

    #[test]
    fn full_anf_has_every_monomial() {
        // the function whose ANF is every monomial: its table is the transform of all ones
        for k in 0..=4 {
            let mut t = vec![true; 1 << k];
            moebius(&mut t);
            let f = BooleanFunction::from_fn(k, |i| t[i]).unwrap();
            assert_eq!(f.anf().monomials.len(), 1 << k);
        }
    }

    #[test]
    fn monotone_examples() {
        assert_eq!(BooleanFunction::and(2).unwrap().monotone_dnf().unwrap(), vec![0b11]);
        let maj = BooleanFunction::majority(3).unwrap();
        let dnf = maj.monotone_dnf().unwrap();
        let mut sets: Vec<Vec<usize>> = dnf.iter().map(|&m| mask_to_vars(m)).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let xor = BooleanFunction::parity(2).unwrap();
        assert!(!xor.is_monotone());
        assert_eq!(xor.monotone_dnf(), Err(Error::NotMonotone));
    }

    #[test]
    fn monotone_dnf_reproduces_function() {
        for k in 0..=4 {
            for f in enumerate_functions(k).unwrap().filter(|f| f.is_monotone()) {
                let dnf = f.monotone_dnf().unwrap();
                for x in 0..f.table_len() as u32 {
                    assert_eq!(dnf.iter().any(|&m| x & m == m), f.eval_index(x as usize));
                }
                for &a in &dnf {
                    for &b in &dnf {
                        assert!(a == b || a & b != a, "implicants not minimal");
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_count_matches_dedekind() {
        let counts: Vec<usize> = (0..=4)
            .map(|k| enumerate_functions(k).unwrap().filter(|f| f.is_monotone()).count())
            .collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_functions(0).unwrap().count(), 2);
        assert_eq!(enumerate_functions(1).unwrap().count(), 4);
        let two: Vec<_> = enumerate_functions(2).unwrap().collect();
        assert_eq!(two.len(), 16);
        assert!(two.windows(2).all(|w| w[0].table_u64() < w[1].table_u64()));
        assert!(matches!(enumerate_functions(5), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn text_form() {
        let xor: BooleanFunction = "2:0x6".parse().unwrap();
        assert_eq!(xor, BooleanFunction::parity(2).unwrap());
        assert_eq!(xor.to_string(), "2:0x6");
        assert_eq!(BooleanFunction::parity(3).unwrap().to_string(), "3:0x96");
        assert_eq!(BooleanFunction::constant(0, true).unwrap().to_string(), "0:0x1");
        assert!("2:0x1f".parse::<BooleanFunction>().is_err());
        assert!("0:0x2".parse::<BooleanFunction>().is_err());
        assert!("2:6".parse::<BooleanFunction>().is_err());
        assert!("9:0x0".parse::<BooleanFunction>().is_err());
        assert!(matches!(
            "2:0xg".parse::<BooleanFunction>(),
            Err(Error::MalformedInput { offset: 4, .. })
        ));
        let big = BooleanFunction::majority(8).unwrap();
        assert_eq!(big.to_string().parse::<BooleanFunction>().unwrap(), big);
        assert_eq!("2:0x06".parse::<BooleanFunction>().unwrap(), xor);
    }

    #[test]
    fn eval_uses_lsb_first() {
        let f = BooleanFunction::from_table(2, 0b0010).unwrap();
        assert!(f.eval(&[true, false]).unwrap());
        assert!(!f.eval(&[false, true]).unwrap());
        assert!(f.eval(&[true]).is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn arity_four_round_trip(table in 0u64..(1 << 16)) {
            let f = BooleanFunction::from_table(4, table).unwrap();
            prop_assert_eq!(BooleanFunction::from_anf(&f.anf()).unwrap(), f);
            prop_assert!(f.anf().monomials.len() <= 16);
        }

        #[test]
        fn text_round_trip(k in 0usize..=8, words in any::<[u64; 4]>()) {
            let f = BooleanFunction::from_fn(k, |i| words[i / 64] >> (i % 64) & 1 == 1).unwrap();
            prop_assert_eq!(f.to_string().parse::<BooleanFunction>().unwrap(), f);
        }
    }
}
