//! Total colourings of circulant graphs, their validation, and the colour
//! class statistics used when reasoning about `C_n(1,3)`.
//!
//! A colouring is three colour words of length `n`: the vertex word, the
//! short-edge word (`v_i v_{i+1}` at position `i`) and the chord word
//! (`v_i v_{i+3}` at position `i`). Colours are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, Element, ElementKind};

/// Colour, 1-based.
pub type Colour = u8;

/// Three colour words over the palette `1..=k`. Properness is not part of
/// the type; see [`TotalColouring::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotalColouring {
    k: Colour,
    vertex: Vec<Colour>,
    edge1: Vec<Colour>,
    edge3: Vec<Colour>,
}

/// Adjacent or incident element pairs sharing a colour.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConflictReport {
    /// Each pair is `(smaller, larger)`; the list is sorted.
    pub conflicts: Vec<(Element, Element)>,
}

impl ConflictReport {
    pub fn is_proper(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.conflicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conflicts.is_empty()
    }
}

impl fmt::Display for ConflictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.conflicts {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// Structured on-disk form of a colouring. Field names are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringRecord {
    pub n: usize,
    pub k: Colour,
    pub vertex_colours: Vec<Colour>,
    pub e1_colours: Vec<Colour>,
    pub e3_colours: Vec<Colour>,
}

impl TotalColouring {
    pub fn new(k: Colour, vertex: Vec<Colour>, edge1: Vec<Colour>, edge3: Vec<Colour>) -> Result<Self> {
        let n = vertex.len();
        if k == 0 {
            return Err(Error::MalformedColouring("palette size must be positive".into()));
        }
        if edge1.len() != n || edge3.len() != n {
            return Err(Error::MalformedColouring(format!(
                "track lengths differ: {} vertices, {} short edges, {} chords",
                n,
                edge1.len(),
                edge3.len()
            )));
        }
        if n == 0 {
            return Err(Error::MalformedColouring("empty colouring".into()));
        }
        if let Some(&c) = vertex.iter().chain(&edge1).chain(&edge3).find(|&&c| c == 0 || c > k) {
            return Err(Error::MalformedColouring(format!("colour {c} outside 1..={k}")));
        }
        Ok(Self {
            k,
            vertex,
            edge1,
            edge3,
        })
    }

    /// Builds a colouring from three digit words such as `"25354543431"`.
    pub fn from_words(k: Colour, vertex: &str, edge1: &str, edge3: &str) -> Result<Self> {
        Self::new(k, parse_word(vertex)?, parse_word(edge1)?, parse_word(edge3)?)
    }

    pub fn n(&self) -> usize {
        self.vertex.len()
    }

    pub fn k(&self) -> Colour {
        self.k
    }

    pub fn vertex_colours(&self) -> &[Colour] {
        &self.vertex
    }

    pub fn e1_colours(&self) -> &[Colour] {
        &self.edge1
    }

    pub fn e3_colours(&self) -> &[Colour] {
        &self.edge3
    }

    pub fn colour(&self, e: Element) -> Colour {
        match e.kind {
            ElementKind::Vertex => self.vertex[e.index],
            ElementKind::EdgeStep1 => self.edge1[e.index],
            ElementKind::EdgeStep3 => self.edge3[e.index],
        }
    }

    /// Colour of the element with dense id `id` (see [`crate::graph`]).
    pub fn colour_by_id(&self, id: usize) -> Colour {
        let n = self.n();
        match id / n {
            0 => self.vertex[id],
            1 => self.edge1[id - n],
            _ => self.edge3[id - 2 * n],
        }
    }

    /// Same colouring with a larger palette.
    pub fn with_palette(&self, k: Colour) -> Result<Self> {
        Self::new(k, self.vertex.clone(), self.edge1.clone(), self.edge3.clone())
    }

    /// Shifts every index by `r`: the colour at position `i` moves to `i + r`.
    pub fn rotated(&self, r: usize) -> Self {
        let n = self.n();
        let rot = |w: &[Colour]| (0..n).map(|i| w[(i + n - r % n) % n]).collect();
        Self {
            k: self.k,
            vertex: rot(&self.vertex),
            edge1: rot(&self.edge1),
            edge3: rot(&self.edge3),
        }
    }

    /// Image under the reflection `v_i -> v_{-i}`, which maps the edge
    /// `v_i v_{i+d}` to `v_{-i-d} v_{-i}`.
    pub fn reflected(&self, g: &CirculantGraph) -> Result<Self> {
        let n = self.n();
        if n != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: n,
            });
        }
        let (d1, d2) = g.offsets();
        let flip = |w: &[Colour], d: usize| (0..n).map(|i| w[(2 * n - i - d) % n]).collect();
        Ok(Self {
            k: self.k,
            vertex: flip(&self.vertex, 0),
            edge1: flip(&self.edge1, d1),
            edge3: flip(&self.edge3, d2),
        })
    }

    /// Relabels colour `c` as `perm[c - 1]`. `perm` must be a permutation
    /// of `1..=k`.
    pub fn permuted(&self, perm: &[Colour]) -> Result<Self> {
        let mut seen = vec![false; self.k as usize];
        if perm.len() != self.k as usize
            || perm
                .iter()
                .any(|&c| c == 0 || c > self.k || std::mem::replace(&mut seen[c as usize - 1], true))
        {
            return Err(Error::MalformedColouring(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.k
            )));
        }
        let map = |w: &[Colour]| w.iter().map(|&c| perm[c as usize - 1]).collect();
        Ok(Self {
            k: self.k,
            vertex: map(&self.vertex),
            edge1: map(&self.edge1),
            edge3: map(&self.edge3),
        })
    }

    /// Lists every adjacent or incident pair with equal colours.
    pub fn verify(&self, g: &CirculantGraph) -> Result<ConflictReport> {
        if self.n() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: self.n(),
            });
        }
        let mut conflicts = Vec::new();
        for a in 0..g.element_count() {
            let ca = self.colour_by_id(a);
            for &b in g.adjacent_ids(a) {
                if b > a && self.colour_by_id(b) == ca {
                    conflicts.push((g.element_at(a), g.element_at(b)));
                }
            }
        }
        conflicts.sort_unstable();
        Ok(ConflictReport { conflicts })
    }

    /// `|V_j|` for `j = 1..=k`, as a vector indexed by `j - 1`.
    pub fn colour_class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k as usize];
        for &c in &self.vertex {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    /// Whether every vertex colour class has the parity of `n`.
    pub fn parity_condition(&self) -> bool {
        let n = self.n();
        self.colour_class_sizes().iter().all(|s| s % 2 == n % 2)
    }

    /// Cyclic gaps between consecutive vertices of colour `j`, sorted
    /// ascending. The gaps sum to `n`.
    pub fn class_gap_multiset(&self, j: Colour) -> Result<Vec<usize>> {
        let n = self.n();
        let members: Vec<usize> = (0..n).filter(|&i| self.vertex[i] == j).collect();
        if members.is_empty() {
            return Err(Error::EmptyClass(j));
        }
        let mut gaps: Vec<usize> = members
            .iter()
            .zip(members.iter().cycle().skip(1))
            .map(|(&a, &b)| (n + b - a - 1) % n + 1)
            .collect();
        gaps.sort_unstable();
        Ok(gaps)
    }

    /// Number of chords (step-3 edges) coloured `j`.
    pub fn chord_colour_count(&self, j: Colour) -> usize {
        self.edge3.iter().filter(|&&c| c == j).count()
    }

    /// Three lines of digits, one per track.
    pub fn to_compact(&self) -> Result<String> {
        if self.k > 9 {
            return Err(Error::MalformedColouring(format!(
                "palette {} too large for digit words",
                self.k
            )));
        }
        let word = |w: &[Colour]| w.iter().map(|&c| char::from(b'0' + c)).collect::<String>();
        Ok(format!(
            "{}\n{}\n{}\n",
            word(&self.vertex),
            word(&self.edge1),
            word(&self.edge3)
        ))
    }

    /// Parses the three-line digit format. Without an explicit palette the
    /// palette is the larger of 5 and the largest colour present.
    pub fn from_compact(text: &str, k: Option<Colour>) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three colour words, found {} lines",
                lines.len()
            )));
        }
        let words = [parse_word(lines[0])?, parse_word(lines[1])?, parse_word(lines[2])?];
        let k = k.unwrap_or_else(|| words.iter().flatten().copied().max().unwrap_or(0).max(5));
        let [vertex, edge1, edge3] = words;
        Self::new(k, vertex, edge1, edge3)
    }

    pub fn to_record(&self) -> ColouringRecord {
        ColouringRecord {
            n: self.n(),
            k: self.k,
            vertex_colours: self.vertex.clone(),
            e1_colours: self.edge1.clone(),
            e3_colours: self.edge3.clone(),
        }
    }

    pub fn from_record(record: ColouringRecord) -> Result<Self> {
        if record.vertex_colours.len() != record.n {
            return Err(Error::MalformedColouring(format!(
                "record declares n = {} but has {} vertex colours",
                record.n,
                record.vertex_colours.len()
            )));
        }
        Self::new(record.k, record.vertex_colours, record.e1_colours, record.e3_colours)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("record serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_record(serde_json::from_str(text)?)
    }

    /// Reads either format, choosing by the first non-blank byte: `{` means
    /// the structured record, a digit means the compact words. `k`
    /// overrides the palette size of either.
    pub fn parse(text: &str, k: Option<Colour>) -> Result<Self> {
        match text.trim_start().bytes().next() {
            Some(b'{') => {
                let c = Self::from_json(text)?;
                match k {
                    Some(k) => c.with_palette(k),
                    None => Ok(c),
                }
            }
            Some(b) if b.is_ascii_digit() => Self::from_compact(text, k),
            Some(b) => Err(Error::Parse(format!(
                "unrecognized colouring format (starts with {:?})",
                b as char
            ))),
            None => Err(Error::Parse("empty input".into())),
        }
    }
}

fn parse_word(word: &str) -> Result<Vec<Colour>> {
    word.trim()
        .chars()
        .map(|ch| match ch.to_digit(10) {
            Some(d) if d > 0 => Ok(d as Colour),
            _ => Err(Error::Parse(format!("invalid colour digit {ch:?} in {word:?}"))),
        })
        .collect()
}
