//! Adjacency labeling: a base scheme for equivalence graphs and the composer
//! that labels a boolean combination from labels of its parts.
//!
//! A composed label is the arity `r` as one byte, then the `2^r` table bits of
//! `f` (input index order), then the `r` base labels, all big-endian at fixed
//! widths that depend only on `n`.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

const ARITY_BITS: usize = 8;

/// A bit string stored most significant bit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label {
    len: usize,
    bytes: Vec<u8>,
}

impl Label {
    pub fn new() -> Label {
        Label { len: 0, bytes: Vec::new() }
    }

    /// Parses `hex` as the first `len` bits; padding bits must be zero.
    pub fn from_hex(hex: &str, len: usize) -> Result<Label> {
        if hex.len() != len.div_ceil(8) * 2 {
            return Err(Error::MalformedLabel(format!("expected {} hex digits for {len} bits", len.div_ceil(8) * 2)));
        }
        let bytes = (0..hex.len() / 2)
            .map(|i| u8::from_str_radix(&hex[2 * i..2 * i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map_err(|_| Error::MalformedLabel(format!("{hex:?} is not hex")))?;
        let label = Label { len, bytes };
        if !len.is_multiple_of(8) && label.bytes.last().is_some_and(|b| b << (len % 8) != 0) {
            return Err(Error::MalformedLabel("nonzero padding bits".into()));
        }
        Ok(label)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for a {}-bit label", self.len);
        self.bytes[i / 8] >> (7 - i % 8) & 1 == 1
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(8) {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[self.len / 8] |= 1 << (7 - self.len % 8);
        }
        self.len += 1;
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_uint(&mut self, value: u64, width: usize) {
        for i in (0..width).rev() {
            self.push(value >> i & 1 == 1);
        }
    }

    pub fn read_uint(&self, start: usize, width: usize) -> u64 {
        (start..start + width).fold(0, |acc, i| acc << 1 | self.bit(i) as u64)
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Default for Label {
    fn default() -> Self {
        Label::new()
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.bit(i) { '1' } else { '0' }).collect();
        write!(f, "Label({bits})")
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseScheme {
    /// Component index; adjacent iff equal.
    Equivalence,
}

impl BaseScheme {
    pub fn width(self, n: usize) -> usize {
        match self {
            BaseScheme::Equivalence => equivalence_width(n),
        }
    }

    pub fn encode(self, g: &Graph) -> Result<Vec<Label>> {
        match self {
            BaseScheme::Equivalence => encode_equivalence(g),
        }
    }

    fn adjacent(self, a: u64, b: u64) -> bool {
        match self {
            BaseScheme::Equivalence => a == b,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BaseScheme::Equivalence => "equivalence",
        }
    }
}

/// `⌈log2 n⌉`, and 1 when `n ≤ 1`.
pub fn equivalence_width(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Labels each vertex with the index of its component.
pub fn encode_equivalence(g: &Graph) -> Result<Vec<Label>> {
    let labels = Partition::of_equivalence_graph(g)?.labels();
    let width = equivalence_width(g.n());
    Ok(labels
        .into_iter()
        .map(|c| {
            let mut l = Label::new();
            l.push_uint(c as u64, width);
            l
        })
        .collect())
}

pub fn decode_equivalence(a: &Label, b: &Label) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::MalformedLabel(format!("lengths {} and {} differ", a.len(), b.len())));
    }
    Ok(a == b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposedScheme {
    pub n: usize,
    pub f: BooleanFunction,
    pub base: Vec<BaseScheme>,
    /// Width of each base label, in order.
    pub widths: Vec<usize>,
}

impl ComposedScheme {
    pub fn arity(&self) -> usize {
        self.base.len()
    }

    /// `8 + 2^r + Σ widths`.
    pub fn label_len(&self) -> usize {
        ARITY_BITS + (1 << self.arity()) + self.widths.iter().sum::<usize>()
    }
}

/// Labels for `apply_boolean(f, graphs)` built from base labels of the parts.
pub fn compose(f: &BooleanFunction, schemes: &[BaseScheme], graphs: &[Graph]) -> Result<(Vec<Label>, ComposedScheme)> {
    let r = f.arity();
    if schemes.len() != r || graphs.len() != r {
        return Err(Error::ArityMismatch {
            expected: r,
            found: if schemes.len() != r { schemes.len() } else { graphs.len() },
        });
    }
    let n = graphs.first().ok_or(Error::EmptyInput)?.n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::MismatchedVertexCount { expected: n, found: g.n() });
    }
    let base: Vec<Vec<Label>> = schemes
        .iter()
        .zip(graphs)
        .map(|(s, g)| s.encode(g).map_err(|_| Error::SchemeRejectsGraph(s.name().into())))
        .collect::<Result<_>>()?;
    let scheme = ComposedScheme {
        n,
        f: *f,
        base: schemes.to_vec(),
        widths: schemes.iter().map(|s| s.width(n)).collect(),
    };
    let labels = (0..n)
        .map(|v| {
            let mut l = Label::new();
            l.push_uint(r as u64, ARITY_BITS);
            for x in 0..1 << r {
                l.push(f.eval_index(x));
            }
            for part in &base {
                for i in 0..part[v].len() {
                    l.push(part[v].bit(i));
                }
            }
            l
        })
        .collect();
    Ok((labels, scheme))
}

fn check_label(scheme: &ComposedScheme, l: &Label) -> Result<()> {
    if l.len() != scheme.label_len() {
        return Err(Error::MalformedLabel(format!("length {} instead of {}", l.len(), scheme.label_len())));
    }
    let r = l.read_uint(0, ARITY_BITS) as usize;
    if r != scheme.arity() {
        return Err(Error::MalformedLabel(format!("arity byte {r} does not match arity {}", scheme.arity())));
    }
    Ok(())
}

/// Adjacency of the two labelled vertices, read from the labels alone; the
/// scheme only supplies field widths.
pub fn decode(scheme: &ComposedScheme, a: &Label, b: &Label) -> Result<bool> {
    check_label(scheme, a)?;
    check_label(scheme, b)?;
    let r = scheme.arity();
    let table_len = 1 << r;
    if (0..table_len).any(|x| a.bit(ARITY_BITS + x) != b.bit(ARITY_BITS + x)) {
        return Err(Error::MalformedLabel("labels carry different functions".into()));
    }
    let mut pos = ARITY_BITS + table_len;
    let mut input = 0;
    for (i, (s, &w)) in scheme.base.iter().zip(&scheme.widths).enumerate() {
        if s.adjacent(a.read_uint(pos, w), b.read_uint(pos, w)) {
            input |= 1 << i;
        }
        pos += w;
    }
    Ok(a.bit(ARITY_BITS + input))
}
