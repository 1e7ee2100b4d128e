//! Search certificates and the total chromatic number of `C_n(1,3)`.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::colouring::{Colour, ColouringRecord, TotalColouring};
use crate::construct::{construct, Construction, TYPE_II_ORDERS};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::solver::{
    search_total_colouring, SearchConfig, SearchOutcome, SearchStatus, SymmetryLevel, DEFAULT_NODE_LIMIT,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Record of one solver run, enough to re-run and compare it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub d1: usize,
    pub d2: usize,
    pub k: Colour,
    pub config: SearchConfig,
    /// SHA-256 of the graph parameters and the configuration.
    pub config_digest: String,
    pub status: SearchStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<ColouringRecord>,
    pub nodes_visited: u64,
    pub max_depth: usize,
    pub wall_time_ms: u64,
    pub version: String,
}

#[derive(Serialize)]
struct DigestInput<'a> {
    n: usize,
    d1: usize,
    d2: usize,
    config: &'a SearchConfig,
}

pub fn config_digest(g: &CirculantGraph, cfg: &SearchConfig) -> String {
    let (d1, d2) = g.offsets();
    let canonical = serde_json::to_vec(&DigestInput {
        n: g.n(),
        d1,
        d2,
        config: cfg,
    })
    .expect("config serializes");
    format!("{:x}", Sha256::digest(canonical))
}

impl Certificate {
    /// Runs the search and records the outcome.
    pub fn certify(g: &CirculantGraph, cfg: &SearchConfig) -> Result<Self> {
        let start = Instant::now();
        let outcome = search_total_colouring(g, cfg)?;
        let elapsed = start.elapsed();
        Ok(Self::from_outcome(g, cfg, &outcome, elapsed.as_millis() as u64))
    }

    fn from_outcome(g: &CirculantGraph, cfg: &SearchConfig, outcome: &SearchOutcome, wall_time_ms: u64) -> Self {
        let (d1, d2) = g.offsets();
        Self {
            n: g.n(),
            d1,
            d2,
            k: cfg.k,
            config: cfg.clone(),
            config_digest: config_digest(g, cfg),
            status: outcome.status,
            colouring: outcome.colouring.as_ref().map(TotalColouring::to_record),
            nodes_visited: outcome.nodes_visited,
            max_depth: outcome.max_depth,
            wall_time_ms,
            version: TOOL_VERSION.to_string(),
        }
    }

    pub fn graph(&self) -> Result<CirculantGraph> {
        CirculantGraph::new(self.n, self.d1, self.d2)
    }

    /// A nonexistence certificate must come from a search without parity
    /// pruning that ran to exhaustion.
    pub fn proves_nonexistence(&self) -> bool {
        self.status == SearchStatus::ExhaustedNoSolution && !self.config.parity_pruning
    }

    /// Checks the record without searching: digest, palette, and for
    /// `Found` that the stored colouring is proper.
    pub fn check_static(&self) -> Result<()> {
        let g = self.graph()?;
        if self.config.k != self.k {
            return Err(Error::CertificateMismatch(format!(
                "k = {} but config has k = {}",
                self.k, self.config.k
            )));
        }
        if config_digest(&g, &self.config) != self.config_digest {
            return Err(Error::CertificateMismatch("configuration digest does not match".into()));
        }
        match (&self.status, &self.colouring) {
            (SearchStatus::Found, Some(record)) => {
                let c = TotalColouring::from_record(record.clone())?;
                if c.k() != self.k {
                    return Err(Error::CertificateMismatch("colouring palette differs from k".into()));
                }
                let report = c.verify(&g)?;
                if !report.is_proper() {
                    return Err(Error::CertificateMismatch(format!(
                        "stored colouring has conflicts:\n{report}"
                    )));
                }
            }
            (SearchStatus::Found, None) => {
                return Err(Error::CertificateMismatch("Found without a colouring".into()));
            }
            (_, Some(_)) => {
                return Err(Error::CertificateMismatch(
                    "colouring attached to a non-Found status".into(),
                ));
            }
            (_, None) => {}
        }
        Ok(())
    }

    /// Re-runs the recorded search and compares status, the first solution
    /// and (for single-worker runs) the node count.
    pub fn recheck(&self) -> Result<()> {
        self.check_static()?;
        let g = self.graph()?;
        let outcome = search_total_colouring(&g, &self.config)?;
        if outcome.status != self.status {
            return Err(Error::CertificateMismatch(format!(
                "status {:?} on re-run, recorded {:?}",
                outcome.status, self.status
            )));
        }
        if outcome.colouring.as_ref().map(TotalColouring::to_record) != self.colouring {
            return Err(Error::CertificateMismatch(
                "re-run found a different first solution".into(),
            ));
        }
        if self.config.worker_count == 1 && outcome.nodes_visited != self.nodes_visited {
            return Err(Error::CertificateMismatch(format!(
                "{} nodes on re-run, recorded {}",
                outcome.nodes_visited, self.nodes_visited
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Knobs shared by the commands that run the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub node_limit: u64,
    pub worker_count: usize,
    pub symmetry_level: SymmetryLevel,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            node_limit: DEFAULT_NODE_LIMIT,
            worker_count: 1,
            symmetry_level: SymmetryLevel::ColourPermPlusRotation,
        }
    }
}

impl SolveOptions {
    pub fn config(&self, k: Colour) -> SearchConfig {
        SearchConfig {
            k,
            node_limit: self.node_limit,
            symmetry_level: self.symmetry_level,
            parity_pruning: false,
            worker_count: self.worker_count,
        }
    }
}

/// The pair of certificates behind `chi'' = 6`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTwoProof {
    pub without_five: Certificate,
    pub with_six: Certificate,
}

impl TypeTwoProof {
    /// Both halves conclusive: no 5-colouring and a 6-colouring found.
    pub fn is_conclusive(&self) -> bool {
        self.without_five.proves_nonexistence() && self.with_six.status == SearchStatus::Found
    }
}

/// Runs the k = 5 and k = 6 searches for a Type II order.
pub fn prove_type2(n: usize, opts: &SolveOptions) -> Result<TypeTwoProof> {
    if !TYPE_II_ORDERS.contains(&n) {
        return Err(Error::NotTypeTwo(n));
    }
    let g = CirculantGraph::c13(n)?;
    Ok(TypeTwoProof {
        without_five: Certificate::certify(&g, &opts.config(5))?,
        with_six: Certificate::certify(&g, &opts.config(6))?,
    })
}

/// How a total chromatic number was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Construction(TotalColouring),
    Certificates(Box<TypeTwoProof>),
}

impl Evidence {
    pub fn method(&self) -> &'static str {
        match self {
            Evidence::Construction(_) => "construction",
            Evidence::Certificates(_) => "certificate",
        }
    }

    /// An optimal total colouring.
    pub fn colouring(&self) -> Option<TotalColouring> {
        match self {
            Evidence::Construction(c) => Some(c.clone()),
            Evidence::Certificates(proof) => proof
                .with_six
                .colouring
                .clone()
                .and_then(|r| TotalColouring::from_record(r).ok()),
        }
    }
}

/// Total chromatic number of `C_n(1,3)` together with its evidence.
pub fn chi_total_with_evidence(n: usize, opts: &SolveOptions) -> Result<(Colour, Evidence)> {
    if n < 7 {
        return Err(Error::OrderTooSmall(n));
    }
    match construct(n)? {
        Construction::TypeTwo => {
            let proof = prove_type2(n, opts)?;
            let five = &proof.without_five;
            match five.status {
                SearchStatus::LimitReached => {
                    return Err(Error::Inconclusive {
                        n,
                        k: 5,
                        nodes: five.nodes_visited,
                    })
                }
                SearchStatus::Found => {
                    let c = TotalColouring::from_record(five.colouring.clone().expect("Found carries a colouring"))?;
                    return Ok((5, Evidence::Construction(c)));
                }
                SearchStatus::ExhaustedNoSolution => {}
            }
            if proof.with_six.status != SearchStatus::Found {
                let six = &proof.with_six;
                return Err(Error::Inconclusive {
                    n,
                    k: 6,
                    nodes: six.nodes_visited,
                });
            }
            Ok((6, Evidence::Certificates(Box::new(proof))))
        }
        other => {
            let g = CirculantGraph::c13(n)?;
            let c = other.into_colouring().expect("Type I construction has a colouring");
            let report = c.verify(&g)?;
            assert!(report.is_proper(), "construction for n = {n} has conflicts:\n{report}");
            Ok((5, Evidence::Construction(c)))
        }
    }
}

pub fn chi_total(n: usize, opts: &SolveOptions) -> Result<Colour> {
    chi_total_with_evidence(n, opts).map(|(chi, _)| chi)
}
