//! Supermagic labelings of the cocktail-party graph `K_{2q[2]}`.
//!
//! The graph is `K_{4q}` on vertices `1..=4q` minus the perfect matching
//! `{2i-1, 2i}`. A labeling is supermagic when every vertex sums to
//! `(2q-1)(N+1)` with `N = 8q^2 - 4q` edges. Small cases are solved by
//! exhaustive depth-first search; larger ones by a seeded local search that
//! swaps labels of nearby value. Results are memoized in-process and, when a
//! cache directory is configured, on disk.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Label, Vertex};

pub const CACHE_ENV: &str = "SWAPMAGIC_CACHE_DIR";
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Depth-first search for `q = 2`, local search otherwise.
    #[default]
    Auto,
    Dfs,
    Local,
}

/// A labeling of the cocktail-party graph, edges in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocktailLabeling {
    q: u32,
    labels: Vec<Label>,
}

impl CocktailLabeling {
    /// Wraps labels given in canonical edge order and checks they are supermagic.
    pub fn new(q: u32, labels: Vec<Label>) -> Result<Self> {
        check_q(q)?;
        let edges = cocktail_edges(q);
        let count = edges.len();
        if labels.len() != count {
            return Err(Error::Malformed(format!(
                "K_{{{}[2]}} has {count} edges but {} labels were given",
                2 * q,
                labels.len()
            )));
        }
        let mut seen = vec![false; count];
        for &x in &labels {
            if x == 0 || x as usize > count || std::mem::replace(&mut seen[x as usize - 1], true) {
                return Err(Error::NotBijection {
                    eps: count as u64,
                    detail: format!("label {x} is out of range or repeated"),
                });
            }
        }
        let out = CocktailLabeling { q, labels };
        let sums = out.vertex_sums();
        let target = out.target();
        if let Some(v) = sums.iter().position(|&s| s != target) {
            return Err(Error::Malformed(format!(
                "vertex {} sums to {}, a supermagic labeling needs {target}",
                v + 1,
                sums[v]
            )));
        }
        Ok(out)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn edge_count(&self) -> u64 {
        self.labels.len() as u64
    }

    /// The common vertex sum.
    pub fn target(&self) -> u64 {
        target(self.q)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        cocktail_edges(self.q)
            .into_iter()
            .zip(self.labels.iter().copied())
    }

    pub fn vertex_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; 4 * self.q as usize];
        for (e, x) in self.iter() {
            sums[e.u as usize - 1] += u64::from(x);
            sums[e.v as usize - 1] += u64::from(x);
        }
        sums
    }

    pub fn to_json(&self) -> String {
        let file = CocktailFile {
            q: self.q,
            labels: self.labels.clone(),
        };
        let mut s = serde_json::to_string(&file).expect("plain struct serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CocktailFile {
    q: u32,
    labels: Vec<Label>,
}

/// Parses `{"q": .., "labels": [..]}` and checks the labeling is supermagic.
pub fn parse_cocktail(text: &str) -> Result<CocktailLabeling> {
    let file: CocktailFile = serde_json::from_str(text)?;
    check_q(file.q)?;
    if file.q > 1 << 12 {
        return Err(Error::Malformed(format!("q = {} is too large", file.q)));
    }
    CocktailLabeling::new(file.q, file.labels)
}

pub fn load_cocktail(path: impl AsRef<Path>) -> Result<CocktailLabeling> {
    parse_cocktail(&std::fs::read_to_string(path)?)
}

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "K_{{{}[2]}} has no supermagic labeling; need q >= 2",
            2 * q
        )));
    }
    Ok(())
}

fn target(q: u32) -> u64 {
    let q = u64::from(q);
    let count = 8 * q * q - 4 * q;
    (2 * q - 1) * (count + 1)
}

/// Edges of `K_{2q[2]}` in canonical order.
pub fn cocktail_edges(q: u32) -> Vec<Edge> {
    let n = 4 * q;
    let mut out = Vec::new();
    for u in 1..n {
        for v in u + 1..=n {
            if !(u % 2 == 1 && v == u + 1) {
                out.push(Edge { u, v });
            }
        }
    }
    out
}

fn memo() -> &'static Mutex<HashMap<u32, CocktailLabeling>> {
    static MEMO: OnceLock<Mutex<HashMap<u32, CocktailLabeling>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn dir_override() -> &'static Mutex<Option<PathBuf>> {
    static DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(Default::default)
}

/// Overrides the cache directory taken from the environment.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *dir_override().lock().expect("cache dir lock") = dir;
}

fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = dir_override().lock().expect("cache dir lock").clone() {
        return Some(d);
    }
    std::env::var_os(CACHE_ENV)
        .filter(|s| !s.is_empty())
        .map(PathBuf::from)
}

fn cache_path(dir: &Path, q: u32) -> PathBuf {
    dir.join(format!("cocktail-q{q}.json"))
}

/// Makes `c` available to later calls with the same `q`.
pub fn register(c: CocktailLabeling) {
    memo().lock().expect("memo lock").insert(c.q, c);
}

fn store(dir: &Path, c: &CocktailLabeling) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = tempfile::NamedTempFile::new_in(dir)?;
    std::fs::write(tmp.path(), c.to_json())?;
    tmp.persist(cache_path(dir, c.q))
        .map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// A supermagic labeling of `K_{2q[2]}`, from cache or by search.
pub fn supermagic_cocktail(q: u32, budget: u64) -> Result<CocktailLabeling> {
    supermagic_cocktail_with(q, budget, SearchStrategy::Auto)
}

pub fn supermagic_cocktail_with(
    q: u32,
    budget: u64,
    strategy: SearchStrategy,
) -> Result<CocktailLabeling> {
    check_q(q)?;
    if let Some(c) = memo().lock().expect("memo lock").get(&q) {
        return Ok(c.clone());
    }
    let dir = cache_dir();
    if let Some(d) = &dir {
        if let Ok(c) = load_cocktail(cache_path(d, q)) {
            if c.q == q {
                register(c.clone());
                return Ok(c);
            }
        }
    }
    let labels = match strategy {
        SearchStrategy::Dfs => dfs(q, budget),
        SearchStrategy::Local => local_search(q, budget),
        SearchStrategy::Auto if q == 2 => dfs(q, budget),
        SearchStrategy::Auto => local_search(q, budget),
    }
    .ok_or(Error::BudgetExhausted {
        parts: 2 * q,
        budget,
    })?;
    let c = CocktailLabeling::new(q, labels)?;
    if let Some(d) = &dir {
        store(d, &c)?;
    }
    register(c.clone());
    Ok(c)
}

struct Topology {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl Topology {
    fn new(q: u32) -> Self {
        let n = 4 * q as usize;
        let edges: Vec<(usize, usize)> = cocktail_edges(q)
            .into_iter()
            .map(|e| (e.u as usize - 1, e.v as usize - 1))
            .collect();
        let mut incident = vec![Vec::new(); n];
        for (k, &(a, b)) in edges.iter().enumerate() {
            incident[a].push(k);
            incident[b].push(k);
        }
        Topology { n, edges, incident }
    }
}

/// Exhaustive search in canonical edge order with vertex-sum range pruning.
fn dfs(q: u32, budget: u64) -> Option<Vec<Label>> {
    let top = Topology::new(q);
    let count = top.edges.len();
    let target = target(q) as i64;
    let mut last_of = vec![usize::MAX; top.n];
    for (v, inc) in top.incident.iter().enumerate() {
        last_of[v] = *inc.iter().max().expect("every vertex has edges");
    }
    let mut st = Dfs {
        top: &top,
        count,
        target,
        last_of,
        used: vec![false; count + 1],
        labels: vec![0; count],
        sums: vec![0; top.n],
        left: top.incident.iter().map(|i| i.len()).collect(),
        nodes: 0,
        budget,
    };
    st.go(0).then_some(st.labels)
}

struct Dfs<'a> {
    top: &'a Topology,
    count: usize,
    target: i64,
    last_of: Vec<usize>,
    used: Vec<bool>,
    labels: Vec<Label>,
    sums: Vec<i64>,
    left: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn go(&mut self, k: usize) -> bool {
        if k == self.count {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let (a, b) = self.top.edges[k];
        let forced = [a, b]
            .iter()
            .filter(|&&v| self.last_of[v] == k)
            .map(|&v| self.target - self.sums[v])
            .collect::<Vec<_>>();
        if forced.len() == 2 && forced[0] != forced[1] {
            return false;
        }
        let candidates: Vec<usize> = match forced.first() {
            Some(&x) if x >= 1 && x as usize <= self.count && !self.used[x as usize] => {
                vec![x as usize]
            }
            Some(_) => return false,
            None => (1..=self.count).filter(|&x| !self.used[x]).collect(),
        };
        for x in candidates {
            self.assign(k, x, true);
            if self.feasible() && self.go(k + 1) {
                return true;
            }
            self.assign(k, x, false);
            if self.nodes > self.budget {
                return false;
            }
        }
        false
    }

    fn assign(&mut self, k: usize, x: usize, on: bool) {
        let (a, b) = self.top.edges[k];
        let d = if on { x as i64 } else { -(x as i64) };
        self.used[x] = on;
        self.labels[k] = if on { x as Label } else { 0 };
        for v in [a, b] {
            self.sums[v] += d;
            if on {
                self.left[v] -= 1;
            } else {
                self.left[v] += 1;
            }
        }
    }

    /// Every vertex can still reach the target with its unassigned edges.
    fn feasible(&self) -> bool {
        let free: Vec<i64> = (1..=self.count)
            .filter(|&x| !self.used[x])
            .map(|x| x as i64)
            .collect();
        let mut prefix = vec![0i64; free.len() + 1];
        for (i, &x) in free.iter().enumerate() {
            prefix[i + 1] = prefix[i] + x;
        }
        let total = prefix[free.len()];
        (0..self.top.n).all(|v| {
            let r = self.left[v];
            if r > free.len() {
                return false;
            }
            let need = self.target - self.sums[v];
            let lo = prefix[r];
            let hi = total - prefix[free.len() - r];
            lo <= need && need <= hi
        })
    }
}

/// Seeded local search minimizing the squared deviation from the target sum.
///
/// Moves swap the labels of two edges whose labels differ by at most `span`;
/// improving and sideways moves are taken greedily, with occasional uphill
/// moves accepted at a decaying temperature.
fn local_search(q: u32, budget: u64) -> Option<Vec<Label>> {
    let top = Topology::new(q);
    let count = top.edges.len();
    let target = target(q) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(q));

    // Start from a greedy assignment: largest remaining label to the edge whose
    // endpoints are furthest below their pro-rata share.
    let mut labels = vec![0 as Label; count];
    let mut sums = vec![0i64; top.n];
    let mut left: Vec<i64> = top.incident.iter().map(|i| i.len() as i64).collect();
    let mut order: Vec<usize> = (0..count).collect();
    for x in (1..=count as Label).rev() {
        let (best_pos, _) = order
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let (a, b) = top.edges[k];
                let need = |v: usize| (target - sums[v]) * 1024 / left[v].max(1);
                (i, need(a) + need(b))
            })
            .max_by_key(|&(i, score)| (score, std::cmp::Reverse(i)))
            .expect("edges remain");
        let k = order.swap_remove(best_pos);
        labels[k] = x;
        let (a, b) = top.edges[k];
        for v in [a, b] {
            sums[v] += i64::from(x);
            left[v] -= 1;
        }
    }

    let mut at = vec![0usize; count + 1];
    for (k, &x) in labels.iter().enumerate() {
        at[x as usize] = k;
    }
    let mut dev: Vec<i64> = sums.iter().map(|&s| s - target).collect();
    let mut energy: i64 = dev.iter().map(|d| d * d).sum();
    let span = 6i64;
    let mut temp = 2.0f64;
    let mut steps = 0u64;

    let delta_energy = |dev: &[i64], e: (usize, usize), f: (usize, usize), d: i64| -> i64 {
        let mut touched: [(usize, i64); 4] = [(e.0, d), (e.1, d), (f.0, -d), (f.1, -d)];
        touched.sort_unstable_by_key(|t| t.0);
        let mut out = 0;
        let mut i = 0;
        while i < 4 {
            let v = touched[i].0;
            let mut c = 0;
            while i < 4 && touched[i].0 == v {
                c += touched[i].1;
                i += 1;
            }
            out += (dev[v] + c).pow(2) - dev[v].pow(2);
        }
        out
    };

    while energy > 0 {
        steps += 1;
        if steps > budget {
            return None;
        }
        if steps.is_multiple_of(20_000) {
            temp = (temp * 0.95).max(0.05);
        }
        // Bias the first edge towards a vertex that is off target.
        let e_k = if rng.gen_bool(0.7) {
            let off: Vec<usize> = (0..top.n).filter(|&v| dev[v] != 0).collect();
            let v = off[rng.gen_range(0..off.len())];
            top.incident[v][rng.gen_range(0..top.incident[v].len())]
        } else {
            rng.gen_range(0..count)
        };
        let x = i64::from(labels[e_k]);
        let step = rng.gen_range(1..=span);
        let y = if rng.gen_bool(0.5) {
            x + step
        } else {
            x - step
        };
        if y < 1 || y > count as i64 {
            continue;
        }
        let f_k = at[y as usize];
        let (e, f) = (top.edges[e_k], top.edges[f_k]);
        let d = y - x;
        let de = delta_energy(&dev, e, f, d);
        let accept = de <= 0 || rng.gen::<f64>() < (-(de as f64) / temp).exp();
        if !accept {
            continue;
        }
        labels.swap(e_k, f_k);
        at[x as usize] = f_k;
        at[y as usize] = e_k;
        dev[e.0] += d;
        dev[e.1] += d;
        dev[f.0] -= d;
        dev[f.1] -= d;
        energy += de;
    }
    Some(labels)
}

/// Vertex sums of a cocktail labeling given as a function on edges.
pub fn sums_of(q: u32, label: impl Fn(Vertex, Vertex) -> Label) -> Vec<u64> {
    let mut sums = vec![0u64; 4 * q as usize];
    for e in cocktail_edges(q) {
        let x = u64::from(label(e.u, e.v));
        sums[e.u as usize - 1] += x;
        sums[e.v as usize - 1] += x;
    }
    sums
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_count_matches() {
        for q in 2..6 {
            assert_eq!(cocktail_edges(q).len() as u32, 8 * q * q - 4 * q);
        }
    }

    #[test]
    fn q2_dfs_is_supermagic() {
        let labels = dfs(2, DEFAULT_BUDGET).expect("q=2 has a solution");
        let c = CocktailLabeling::new(2, labels).unwrap();
        assert!(c.vertex_sums().iter().all(|&s| s == 75));
    }

    #[test]
    fn local_search_q3() {
        let labels = local_search(3, DEFAULT_BUDGET).expect("q=3 converges");
        CocktailLabeling::new(3, labels).unwrap();
    }

    #[test]
    fn q1_is_rejected() {
        assert!(supermagic_cocktail(1, 10).is_err());
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        assert!(dfs(3, 5).is_none());
        assert!(local_search(3, 5).is_none());
    }
}
