//! Explicit total 5-colourings of `C_n(1,3)`.
//!
//! Every order `n = 5p + 9q` is coloured by repeating a length-5 block `p`
//! times followed by a length-9 block `q` times. The remaining Type I
//! orders (11, 16, 21, 22, 26, 31) use stored colourings. The orders 7, 8,
//! 12, 13 and 17 have no total 5-colouring and are left to the solver.

use std::sync::OnceLock;

use crate::colouring::TotalColouring;
use crate::error::{Error, Result};

/// Orders whose total chromatic number is 6.
pub const TYPE_II_ORDERS: [usize; 5] = [7, 8, 12, 13, 17];

/// Orders `n >= 7` that are not of the form `5p + 9q`.
pub const NON_REPRESENTABLE: [usize; 11] = [7, 8, 11, 12, 13, 16, 17, 21, 22, 26, 31];

/// Orders coloured from the stored table.
pub const SPORADIC_ORDERS: [usize; 6] = [11, 16, 21, 22, 26, 31];

/// The two periodic blocks and their repetition counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockPattern {
    pub repeat_a: usize,
    pub repeat_b: usize,
}

impl BlockPattern {
    pub const VERTEX_A: &'static str = "24351";
    pub const E1_A: &'static str = "12123";
    pub const E3_A: &'static str = "45534";
    pub const VERTEX_B: &'static str = "212534121";
    pub const E1_B: &'static str = "453453453";
    pub const E3_B: &'static str = "121212534";

    pub fn new(repeat_a: usize, repeat_b: usize) -> Self {
        Self { repeat_a, repeat_b }
    }

    pub fn len(&self) -> usize {
        5 * self.repeat_a + 9 * self.repeat_b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The three expanded words, a-blocks first.
    pub fn expand(&self) -> [String; 3] {
        let track = |a: &str, b: &str| a.repeat(self.repeat_a) + &b.repeat(self.repeat_b);
        [
            track(Self::VERTEX_A, Self::VERTEX_B),
            track(Self::E1_A, Self::E1_B),
            track(Self::E3_A, Self::E3_B),
        ]
    }
}

/// Result of [`construct`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Block {
        pattern: BlockPattern,
        colouring: TotalColouring,
    },
    Sporadic(TotalColouring),
    /// No total 5-colouring exists; the proof is a solver certificate.
    TypeTwo,
}

impl Construction {
    pub fn colouring(&self) -> Option<&TotalColouring> {
        match self {
            Construction::Block { colouring, .. } | Construction::Sporadic(colouring) => Some(colouring),
            Construction::TypeTwo => None,
        }
    }

    pub fn into_colouring(self) -> Option<TotalColouring> {
        match self {
            Construction::Block { colouring, .. } | Construction::Sporadic(colouring) => Some(colouring),
            Construction::TypeTwo => None,
        }
    }
}

/// Writes `n = 5p + 9q` with the smallest possible `q`.
pub fn decompose_5p9q(n: usize) -> Option<(usize, usize)> {
    (0..=n / 9)
        .find(|&q| (n - 9 * q).is_multiple_of(5))
        .map(|q| ((n - 9 * q) / 5, q))
}

/// Block colouring of `C_{5p+9q}(1,3)`.
pub fn colour_5p9q(p: usize, q: usize) -> Result<TotalColouring> {
    let pattern = BlockPattern::new(p, q);
    if pattern.len() < 7 {
        return Err(Error::DegenerateSize(pattern.len()));
    }
    let [v, e1, e3] = pattern.expand();
    TotalColouring::from_words(5, &v, &e1, &e3)
}

const SPORADIC_WORDS: [(usize, [&str; 3]); 6] = [
    (11, ["25354543431", "12121212123", "43435354545"]),
    (16, ["2453534242353524", "1212121314141415", "4345453525232353"]),
    (
        21,
        [
            "234345453512345123451",
            "121212121231213451323",
            "453534345454532214545",
        ],
    ),
    (
        22,
        [
            "2545353434545353124341",
            "1212121212121212312124",
            "3434545353434545453535",
        ],
    ),
    (
        26,
        [
            "24535343454535141252313421",
            "12121212121212323434545145",
            "43454535343454515121232353",
        ],
    ),
    (
        31,
        [
            "2343454535123451234512345123451",
            "1212121212312134513231213451323",
            "4535343454545322145454532214545",
        ],
    ),
];

fn sporadic_table() -> &'static [(usize, TotalColouring)] {
    static TABLE: OnceLock<Vec<(usize, TotalColouring)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        SPORADIC_WORDS
            .iter()
            .map(|&(n, [v, e1, e3])| {
                let c = TotalColouring::from_words(5, v, e1, e3).expect("stored sporadic words are well formed");
                #[cfg(debug_assertions)]
                {
                    let g = crate::graph::CirculantGraph::c13(n).unwrap();
                    let report = c.verify(&g).unwrap();
                    assert!(
                        report.is_proper(),
                        "stored colouring for n = {n} has conflicts:\n{report}"
                    );
                }
                (n, c)
            })
            .collect()
    })
}

/// Stored colouring for `n` in 11, 16, 21, 22, 26, 31.
pub fn colour_sporadic(n: usize) -> Result<TotalColouring> {
    sporadic_table()
        .iter()
        .find(|(m, _)| *m == n)
        .map(|(_, c)| c.clone())
        .ok_or(Error::NotSporadic(n))
}

/// Total 5-colouring of `C_n(1,3)` for any Type I order, or
/// [`Construction::TypeTwo`] for the five exceptional orders.
pub fn construct(n: usize) -> Result<Construction> {
    if n < 7 {
        return Err(Error::OrderTooSmall(n));
    }
    if TYPE_II_ORDERS.contains(&n) {
        return Ok(Construction::TypeTwo);
    }
    match decompose_5p9q(n) {
        Some((p, q)) => Ok(Construction::Block {
            pattern: BlockPattern::new(p, q),
            colouring: colour_5p9q(p, q)?,
        }),
        None => Ok(Construction::Sporadic(colour_sporadic(n)?)),
    }
}
