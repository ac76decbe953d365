use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::field::{rat, Rational};
use crate::linalg::{Plane2, QMatrix3};

/// The five conjugacy classes of limits of the positive diagonal group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LimitClass {
    C,
    F,
    N1,
    N2,
    N3,
}

impl LimitClass {
    pub const ALL: [LimitClass; 5] = [
        LimitClass::C,
        LimitClass::F,
        LimitClass::N1,
        LimitClass::N2,
        LimitClass::N3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LimitClass::C => "C",
            LimitClass::F => "F",
            LimitClass::N1 => "N1",
            LimitClass::N2 => "N2",
            LimitClass::N3 => "N3",
        }
    }

    /// Lie algebra of the group family.
    pub fn canonical_algebra(self) -> Plane2<Rational> {
        let e = |i: usize, j: usize| QMatrix3::unit(i - 1, j - 1);
        let (a, b) = match self {
            LimitClass::C => (
                QMatrix3::diag(rat(1, 1), rat(-1, 1), rat(0, 1)),
                QMatrix3::diag(rat(0, 1), rat(1, 1), rat(-1, 1)),
            ),
            LimitClass::F => (QMatrix3::diag(rat(1, 1), rat(1, 1), rat(-2, 1)), e(1, 2)),
            LimitClass::N1 => (e(1, 2).add(&e(2, 3)), e(1, 3)),
            LimitClass::N2 => (e(1, 2), e(1, 3)),
            LimitClass::N3 => (e(1, 3), e(2, 3)),
        };
        Plane2::new(a, b).expect("canonical algebras are planes")
    }

    /// Parametrized group, as displayed in the family table.
    pub fn group_form(self) -> &'static str {
        match self {
            LimitClass::C => "[[a, 0, 0], [0, b, 0], [0, 0, 1/(ab)]], a, b > 0",
            LimitClass::F => "[[a, t, 0], [0, a, 0], [0, 0, 1/a^2]], a > 0",
            LimitClass::N1 => "[[1, s, t], [0, 1, s], [0, 0, 1]]",
            LimitClass::N2 => "[[1, s, t], [0, 1, 0], [0, 0, 1]]",
            LimitClass::N3 => "[[1, 0, t], [0, 1, s], [0, 0, 1]]",
        }
    }
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown class {0:?}")]
pub struct UnknownClass(pub String);

impl FromStr for LimitClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LimitClass::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// Degenerate triangle configurations, keyed by the number of distinct
/// points and lines. A count of 3 also stands for infinitely many.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigClass {
    TC,
    TF,
    TN1,
    TN2,
    TN3,
    TN2p,
    TN3p,
}

impl ConfigClass {
    pub const ALL: [ConfigClass; 7] = [
        ConfigClass::TC,
        ConfigClass::TF,
        ConfigClass::TN1,
        ConfigClass::TN2,
        ConfigClass::TN3,
        ConfigClass::TN2p,
        ConfigClass::TN3p,
    ];

    pub fn from_counts(points: usize, lines: usize) -> Option<Self> {
        ConfigClass::ALL
            .into_iter()
            .find(|c| c.points() == points && c.lines() == lines)
    }

    pub fn points(self) -> usize {
        match self {
            ConfigClass::TC | ConfigClass::TN3 => 3,
            ConfigClass::TF | ConfigClass::TN3p => 2,
            ConfigClass::TN1 | ConfigClass::TN2 | ConfigClass::TN2p => 1,
        }
    }

    pub fn lines(self) -> usize {
        match self {
            ConfigClass::TC | ConfigClass::TN2 => 3,
            ConfigClass::TF | ConfigClass::TN2p => 2,
            ConfigClass::TN1 | ConfigClass::TN3 | ConfigClass::TN3p => 1,
        }
    }

    /// Points and lines exchanged.
    pub fn dual(self) -> Self {
        ConfigClass::from_counts(self.lines(), self.points()).expect("table is self-dual")
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConfigClass::TC => "TC",
            ConfigClass::TF => "TF",
            ConfigClass::TN1 => "TN1",
            ConfigClass::TN2 => "TN2",
            ConfigClass::TN3 => "TN3",
            ConfigClass::TN2p => "TN2p",
            ConfigClass::TN3p => "TN3p",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ConfigClass::TC => "three points in general position and the three lines joining them",
            ConfigClass::TF => {
                "two points, the line joining them and one more line through one of them"
            }
            ConfigClass::TN1 => "a flag: one point on one line",
            ConfigClass::TN2 => "invariant pencil through fixed point",
            ConfigClass::TN3 => "pointwise-fixed line",
            ConfigClass::TN2p => "one point with two lines through it",
            ConfigClass::TN3p => "two points on one line",
        }
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The limit digraph on the five classes.
#[derive(Clone, Copy, Debug, Default)]
pub struct Digraph;

impl Digraph {
    pub const EDGES: [(LimitClass, LimitClass); 4] = [
        (LimitClass::C, LimitClass::F),
        (LimitClass::F, LimitClass::N1),
        (LimitClass::N1, LimitClass::N2),
        (LimitClass::N1, LimitClass::N3),
    ];

    pub fn has_edge(from: LimitClass, to: LimitClass) -> bool {
        Self::EDGES.contains(&(from, to))
    }

    /// Shortest path from `from` to `to`. With `proper` the path must have
    /// at least one edge; otherwise `[from]` reaches itself.
    pub fn path(from: LimitClass, to: LimitClass, proper: bool) -> Option<Vec<LimitClass>> {
        if from == to && !proper {
            return Some(vec![from]);
        }
        let mut prev: Vec<Option<LimitClass>> = vec![None; 5];
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &(a, b) in &Self::EDGES {
                if a != u || prev[b as usize].is_some() {
                    continue;
                }
                prev[b as usize] = Some(u);
                if b == to {
                    let mut path = vec![to];
                    let mut cur = u;
                    while cur != from {
                        path.push(cur);
                        cur = prev[cur as usize].expect("visited");
                    }
                    path.push(from);
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(b);
            }
        }
        None
    }
}

/// Whether `to` is a conjugacy limit of `from`; every class is its own limit.
pub fn limit_reachable(from: LimitClass, to: LimitClass) -> bool {
    Digraph::path(from, to, false).is_some()
}

/// Like [`limit_reachable`] but requiring a nonconstant degeneration.
pub fn proper_limit_reachable(from: LimitClass, to: LimitClass) -> bool {
    Digraph::path(from, to, true).is_some()
}
