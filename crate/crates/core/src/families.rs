//! Constructors for named graph families: complete graphs, stars, cycles,
//! paths, perfect-matching complements, and the three known diameter-2 Moore
//! graphs (the pentagon, the Petersen graph, and the Hoffman-Singleton
//! graph).

use crate::graph::{Graph, MAX_VERTICES};
use crate::invariants::is_moore_d2;
use serde::Serialize;
use thiserror::Error;

/// A named family member. Size parameters count vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Complete(usize),
    /// Star on `n` vertices: one center joined to `n - 1` leaves.
    Star(usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    HoffmanSingleton,
    /// Complement of a perfect matching on `n` vertices (`n` even).
    MatchingComplement(usize),
    /// Diameter-2 Moore graph of the given degree (2, 3, or 7).
    Moore(usize),
}

/// Errors from family construction and name parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires {requirement}, got {got}")]
    InvalidParameter { family: &'static str, requirement: &'static str, got: usize },
    #[error("no diameter-2 Moore graph of degree 57 is known; its existence is an open problem")]
    MooreDegree57Open,
    #[error("diameter-2 Moore graphs exist only for degrees 2, 3, and 7, got {0}")]
    MooreDegree(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {0} requires a size parameter")]
    MissingParameter(&'static str),
    #[error("family {0} takes no size parameter")]
    UnexpectedParameter(&'static str),
}

impl FamilySpec {
    /// Parses a family from a name and optional parameter, as given on a
    /// command line: `complete`, `star`, `cycle`, `path`, `petersen`,
    /// `hoffman-singleton`, `matching-complement`, `moore`.
    pub fn from_parts(name: &str, param: Option<usize>) -> Result<FamilySpec, FamilyError> {
        let sized = |family, f: fn(usize) -> FamilySpec| match param {
            Some(p) => Ok(f(p)),
            None => Err(FamilyError::MissingParameter(family)),
        };
        let fixed = |family, spec| match param {
            None => Ok(spec),
            Some(_) => Err(FamilyError::UnexpectedParameter(family)),
        };
        match name {
            "complete" => sized("complete", FamilySpec::Complete),
            "star" => sized("star", FamilySpec::Star),
            "cycle" => sized("cycle", FamilySpec::Cycle),
            "path" => sized("path", FamilySpec::Path),
            "matching-complement" => sized("matching-complement", FamilySpec::MatchingComplement),
            "moore" => sized("moore", FamilySpec::Moore),
            "petersen" => fixed("petersen", FamilySpec::Petersen),
            "hoffman-singleton" => fixed("hoffman-singleton", FamilySpec::HoffmanSingleton),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

fn order_in_range(family: &'static str, n: usize, min: usize) -> Result<(), FamilyError> {
    if n < min {
        let requirement = match min {
            1 => "at least 1 vertex",
            2 => "at least 2 vertices",
            3 => "at least 3 vertices",
            _ => "a larger order",
        };
        return Err(FamilyError::InvalidParameter { family, requirement, got: n });
    }
    if n > MAX_VERTICES {
        return Err(FamilyError::InvalidParameter {
            family,
            requirement: "at most 64 vertices",
            got: n,
        });
    }
    Ok(())
}

/// Builds the named family member.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match *spec {
        FamilySpec::Complete(n) => {
            order_in_range("complete", n, 1)?;
            Ok(Graph::empty(n).unwrap().complement())
        }
        FamilySpec::Star(n) => {
            order_in_range("star", n, 2)?;
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        FamilySpec::Cycle(n) => {
            order_in_range("cycle", n, 3)?;
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        FamilySpec::Path(n) => {
            order_in_range("path", n, 1)?;
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::HoffmanSingleton => Ok(hoffman_singleton()),
        FamilySpec::MatchingComplement(n) => {
            order_in_range("matching-complement", n, 2)?;
            if n % 2 != 0 {
                return Err(FamilyError::InvalidParameter {
                    family: "matching-complement",
                    requirement: "an even number of vertices",
                    got: n,
                });
            }
            let matching: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
            Ok(Graph::from_edges(n, &matching).unwrap().complement())
        }
        FamilySpec::Moore(degree) => match degree {
            2 => make_family(&FamilySpec::Cycle(5)),
            3 => Ok(petersen()),
            7 => Ok(hoffman_singleton()),
            57 => Err(FamilyError::MooreDegree57Open),
            other => Err(FamilyError::MooreDegree(other)),
        },
    }
}

/// Petersen graph as the Kneser graph of 2-element subsets of a 5-element
/// set, adjacent when disjoint. Subsets are numbered in lexicographic order.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Hoffman-Singleton graph: five pentagons P_h (vertex j joined to j +- 1)
/// and five pentagrams Q_i (vertex j joined to j +- 2), with vertex j of P_h
/// joined to vertex h*i + j (mod 5) of Q_i. The construction is easy to get
/// subtly wrong, so the result is validated structurally before returning.
fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for block in 0..5 {
        for j in 0..5 {
            edges.push((p(block, j), p(block, j + 1)));
            edges.push((q(block, j), q(block, j + 2)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    let g = Graph::from_edges(50, &edges).unwrap();
    assert_eq!(g.n(), 50);
    assert_eq!(g.edge_count(), 175);
    assert!(
        is_moore_d2(&g),
        "Hoffman-Singleton construction must be 7-regular with girth 5 on 50 vertices"
    );
    g
}
