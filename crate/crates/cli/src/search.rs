//! Stochastic local search over graphs of a fixed order: single edge
//! toggles, constraint-violating moves rejected, restart on stagnation.
//! Deterministic for a fixed seed.

use crate::{Format, ObjectiveArg};
use eigenbounds::{
    domination_number, girth, laplacian_spectrum, spectral_radius, BoundSelection, Graph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SearchParams {
    pub n: usize,
    pub objective: ObjectiveArg,
    pub constraint: String,
    pub seed: u64,
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Constraint {
    GirthAtLeast5,
    FixedGamma(usize),
}

/// Accepted moves must keep the score within this slack of the current one;
/// strictly larger gains reset the stagnation counter.
const PLATEAU_SLACK: f64 = 1e-12;
/// Restart after this many proposals without strict improvement.
const STAGNATION_LIMIT: u32 = 200;

fn parse_constraint(text: &str) -> Option<Constraint> {
    if text == "girth5" {
        return Some(Constraint::GirthAtLeast5);
    }
    let rest = text.strip_prefix("gamma:")?;
    rest.parse::<usize>().ok().map(Constraint::FixedGamma)
}

fn satisfies(g: &Graph, c: Constraint) -> bool {
    match c {
        Constraint::GirthAtLeast5 => girth(g).is_at_least(5),
        Constraint::FixedGamma(k) => domination_number(g) == k,
    }
}

fn score(g: &Graph, objective: ObjectiveArg) -> f64 {
    match objective {
        ObjectiveArg::MaximizeMu => spectral_radius(g).expect("eigensolve converges"),
        ObjectiveArg::MinimizeLambdaMax => {
            -*laplacian_spectrum(g).expect("eigensolve converges").values().last().unwrap()
        }
    }
}

fn toggled(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count() + 1);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) != ((a, b) == (u.min(v), u.max(v))) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn initial(n: usize, constraint: Constraint, rng: &mut ChaCha8Rng) -> Graph {
    match constraint {
        Constraint::GirthAtLeast5 => {
            // Greedy random girth-preserving additions from the empty graph.
            let mut g = Graph::empty(n).unwrap();
            for _ in 0..2 * n {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u == v || g.has_edge(u, v) {
                    continue;
                }
                let cand = toggled(&g, u, v);
                if girth(&cand).is_at_least(5) {
                    g = cand;
                }
            }
            g
        }
        Constraint::FixedGamma(k) => {
            // A star on n-k+1 vertices plus k-1 isolated vertices has
            // domination number exactly k; shuffle the labels for variety.
            let star_order = n - k + 1;
            let edges: Vec<(usize, usize)> = (1..star_order).map(|v| (0, v)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            g.permuted(&perm)
        }
    }
}

pub fn cmd_search(params: SearchParams, selection: &BoundSelection, format: Format) -> i32 {
    let n = params.n;
    if !(5..=32).contains(&n) {
        eprintln!("error: search order must be between 5 and 32 (got {n})");
        return 2;
    }
    let Some(constraint) = parse_constraint(&params.constraint) else {
        eprintln!(
            "error: invalid constraint {:?} (expected \"girth5\" or \"gamma:K\")",
            params.constraint
        );
        return 2;
    };
    if let Constraint::FixedGamma(k) = constraint {
        if k == 0 || k > n {
            eprintln!("error: no graph on {n} vertices has domination number {k}");
            return 2;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut cur = initial(n, constraint, &mut rng);
    debug_assert!(satisfies(&cur, constraint));
    let mut cur_score = score(&cur, params.objective);
    let mut best = cur.clone();
    let mut best_score = cur_score;
    let mut stagnant = 0u32;

    for _ in 0..params.budget {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let cand = toggled(&cur, u, v);
        let mut improved = false;
        if satisfies(&cand, constraint) {
            let s = score(&cand, params.objective);
            if s >= cur_score - PLATEAU_SLACK {
                improved = s > cur_score + PLATEAU_SLACK;
                cur = cand;
                cur_score = s;
                if cur_score > best_score + PLATEAU_SLACK {
                    best = cur.clone();
                    best_score = cur_score;
                }
            }
        }
        if improved {
            stagnant = 0;
        } else {
            stagnant += 1;
            if stagnant >= STAGNATION_LIMIT {
                cur = initial(n, constraint, &mut rng);
                cur_score = score(&cur, params.objective);
                if cur_score > best_score + PLATEAU_SLACK {
                    best = cur.clone();
                    best_score = cur_score;
                }
                stagnant = 0;
            }
        }
    }

    assert!(satisfies(&best, constraint), "search result violates its constraint");
    let source = format!(
        "search:n={n},objective={},constraint={},seed={},budget={}",
        match params.objective {
            ObjectiveArg::MaximizeMu => "maximize-mu",
            ObjectiveArg::MinimizeLambdaMax => "minimize-lambda-max",
        },
        params.constraint,
        params.seed,
        params.budget
    );
    let report = crate::report::build_report(source, &best, selection);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    crate::report::write_report(&mut out, &report, format).expect("stdout write");
    0
}
