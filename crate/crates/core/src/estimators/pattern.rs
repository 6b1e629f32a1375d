use std::fmt;
use std::str::FromStr;

use super::EstimatorError;

/// Which structure is being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `k`-cliques.
    KClique,
    /// `k`-sets missing exactly one edge.
    K1,
    /// `k`-sets missing two edges that share an endpoint.
    K2Type1,
    /// `k`-sets missing two vertex-disjoint edges.
    K2Type2,
}

impl PatternKind {
    pub const ALL: [PatternKind; 4] = [
        PatternKind::KClique,
        PatternKind::K1,
        PatternKind::K2Type1,
        PatternKind::K2Type2,
    ];

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            PatternKind::KClique => "kclique",
            PatternKind::K1 => "k1",
            PatternKind::K2Type1 => "k2t1",
            PatternKind::K2Type2 => "k2t2",
        }
    }

    /// Smallest supported pattern size.
    pub fn min_k(self) -> usize {
        match self {
            PatternKind::KClique | PatternKind::K1 => 3,
            PatternKind::K2Type1 | PatternKind::K2Type2 => 4,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = EstimatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PatternKind::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| EstimatorError::UnknownPattern(s.to_string()))
    }
}

/// A pattern kind together with its size `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PatternSpec {
    kind: PatternKind,
    k: usize,
}

impl PatternSpec {
    pub fn new(kind: PatternKind, k: usize) -> Result<Self, EstimatorError> {
        if k < kind.min_k() {
            return Err(EstimatorError::PatternTooSmall {
                kind,
                k,
                min: kind.min_k(),
            });
        }
        Ok(PatternSpec { kind, k })
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of the clique the pattern is counted through.
    pub fn h(&self) -> usize {
        match self.kind {
            PatternKind::KClique => self.k,
            PatternKind::K1 | PatternKind::K2Type1 => self.k - 1,
            PatternKind::K2Type2 => self.k - 2,
        }
    }

    /// Upper bound `B` on the per-clique count, given vertex count `n`, maximum
    /// degree and degeneracy.
    pub fn bound(&self, n: usize, d_max: usize, degeneracy: usize) -> f64 {
        let n = n as f64;
        let d_max = d_max as f64;
        match self.kind {
            PatternKind::KClique => 1.0,
            PatternKind::K1 => (2.0 * d_max).min(n),
            PatternKind::K2Type1 => (3.0 * d_max).min(n),
            PatternKind::K2Type2 => {
                let k = self.k as f64;
                (n * n).min(k * k * degeneracy as f64 * d_max / 2.0)
            }
        }
    }
}
