//! Graphs with a symmetric edge relation, loops permitted, together with
//! homomorphism enumeration, products, folds, neighborhoods, pushouts and
//! the named families used throughout the library.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Default node budget for backtracking enumerations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A finite graph: vertex labels plus a symmetric adjacency relation.
/// Loops are allowed; `adj[v]` may contain `v` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph from labels and edge pairs. Labels are sorted and
    /// deduplicated; the edge set is symmetrized.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        labels.sort();
        labels.dedup();
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let i = *index.get(a.as_ref()).ok_or_else(|| {
                Error::Structural(format!("edge endpoint {:?} is not a declared vertex", a.as_ref()))
            })?;
            let j = *index.get(b.as_ref()).ok_or_else(|| {
                Error::Structural(format!("edge endpoint {:?} is not a declared vertex", b.as_ref()))
            })?;
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(Graph { labels, adj })
    }

    pub fn empty() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        // undirected count: loops count once
        let mut n = 0;
        for (i, nb) in self.adj.iter().enumerate() {
            for &j in nb {
                if j >= i {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.has_edge(i, i)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Directed edge pairs (both orientations, loops once per orientation).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nb) in self.adj.iter().enumerate() {
            for &j in nb {
                out.push((i, j));
            }
        }
        out
    }

    /// Undirected edge pairs with i <= j.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nb) in self.adj.iter().enumerate() {
            for &j in nb {
                if j >= i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_any_loop(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.has_loop(v))
    }

    /// Induced subgraph on the given vertex indices.
    pub fn induced(&self, verts: &BTreeSet<usize>) -> Graph {
        let labels: Vec<&str> = verts.iter().map(|&v| self.label(v)).collect();
        let mut edges = Vec::new();
        for &i in verts {
            for &j in self.neighbors(i) {
                if verts.contains(&j) && j >= i {
                    edges.push((self.label(i), self.label(j)));
                }
            }
        }
        Graph::new(&labels, &edges).expect("induced subgraph is well-formed")
    }

    /// Induced subgraph by labels.
    pub fn induced_by_labels(&self, labels: &BTreeSet<String>) -> Result<Graph> {
        let mut verts = BTreeSet::new();
        for l in labels {
            let v = self
                .index_of(l)
                .ok_or_else(|| Error::Precondition(format!("vertex {l:?} not in graph")))?;
            verts.insert(v);
        }
        Ok(self.induced(&verts))
    }

    /// True when `other` is a subgraph of `self` (matched by labels).
    pub fn contains_subgraph(&self, other: &Graph) -> bool {
        for l in other.labels() {
            if self.index_of(l).is_none() {
                return false;
            }
        }
        for (i, j) in other.edge_pairs() {
            let a = self.index_of(other.label(i)).unwrap();
            let b = self.index_of(other.label(j)).unwrap();
            if !self.has_edge(a, b) {
                return false;
            }
        }
        true
    }

    // ---- named families -------------------------------------------------

    /// Complete graph K_n on labels "1".."n", no loops.
    pub fn complete(n: usize) -> Graph {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i.to_string(), j.to_string()));
            }
        }
        Graph::new(&labels, &edges).unwrap()
    }

    /// Cycle C_n on labels "0".."n-1". C_1 is a looped vertex, C_2 is K_2.
    pub fn cycle(n: usize) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let edges: Vec<(String, String)> =
            (0..n).map(|i| (i.to_string(), ((i + 1) % n).to_string())).collect();
        Graph::new(&labels, &edges).unwrap()
    }

    /// The one-point looped graph.
    pub fn one() -> Graph {
        Graph::new(&["*"], &[("*", "*")]).unwrap()
    }

    /// The looped complete graph on n+1 vertices "0".."n".
    pub fn sigma(n: usize) -> Graph {
        let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..=n {
            for j in i..=n {
                edges.push((i.to_string(), j.to_string()));
            }
        }
        Graph::new(&labels, &edges).unwrap()
    }

    /// Path graph on the given labels, in the given order.
    pub fn path<S: AsRef<str>>(labels: &[S]) -> Graph {
        let edges: Vec<(&str, &str)> = labels
            .windows(2)
            .map(|w| (w[0].as_ref(), w[1].as_ref()))
            .collect();
        let ls: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
        Graph::new(&ls, &edges).unwrap()
    }

    /// Stable Kneser (Schrijver) graph SG_{n,k}: stable k-subsets of Z_n,
    /// adjacent iff disjoint. A subset is stable when x in the subset implies
    /// x+1 mod n is not.
    pub fn stable_kneser(n: usize, k: usize) -> Result<Graph> {
        if k == 0 || n < 2 * k {
            return Err(Error::Precondition(format!(
                "stable Kneser requires n >= 2k and k >= 1, got n={n}, k={k}"
            )));
        }
        let mut subsets: Vec<u64> = Vec::new();
        for mask in 1u64..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let shifted = ((mask << 1) | (mask >> (n - 1))) & ((1 << n) - 1);
            if mask & shifted == 0 {
                subsets.push(mask);
            }
        }
        let fmt = |m: u64| {
            let els: Vec<String> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| i.to_string()).collect();
            format!("{{{}}}", els.join(","))
        };
        let labels: Vec<String> = subsets.iter().map(|&m| fmt(m)).collect();
        let mut edges = Vec::new();
        for (a, &ma) in subsets.iter().enumerate() {
            for &mb in subsets.iter().skip(a + 1) {
                if ma & mb == 0 {
                    edges.push((fmt(ma), fmt(mb)));
                }
            }
        }
        Graph::new(&labels, &edges)
    }

    // ---- products and quotient-free constructions -----------------------

    /// Tensor (categorical) product: (x,v) ~ (y,w) iff x~y and v~w.
    pub fn tensor(&self, other: &Graph) -> Graph {
        let mut labels = Vec::new();
        for a in self.labels() {
            for b in other.labels() {
                labels.push(pair_label(a, b));
            }
        }
        let mut edges = Vec::new();
        for (x, y) in self.edges() {
            for (v, w) in other.edges() {
                edges.push((
                    pair_label(self.label(x), other.label(v)),
                    pair_label(self.label(y), other.label(w)),
                ));
            }
        }
        Graph::new(&labels, &edges).unwrap()
    }

    // ---- invariants ------------------------------------------------------

    /// Connected components as sorted vertex index sets.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Max shortest-path distance. Errors on disconnected or empty graphs.
    pub fn diameter(&self) -> Result<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::Precondition("diameter of the empty graph".into()));
        }
        if self.components().len() > 1 {
            return Err(Error::Precondition("diameter requires a connected graph".into()));
        }
        let mut diam = 0;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            diam = diam.max(*dist.iter().filter(|&&d| d != usize::MAX).max().unwrap());
        }
        Ok(diam)
    }

    /// Brute-force chromatic number by ascending k-coloring search.
    /// Undefined (error) when the graph has a loop.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.has_any_loop() {
            return Err(Error::Precondition(
                "chromatic number is undefined for graphs with loops".into(),
            ));
        }
        let n = self.vertex_count();
        if n == 0 {
            return Ok(0);
        }
        if self.edge_count() == 0 {
            return Ok(1);
        }
        for k in 2..=n {
            if self.colorable(k) {
                return Ok(k);
            }
        }
        Ok(n)
    }

    fn colorable(&self, k: usize) -> bool {
        // backtracking over vertices in descending degree order
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut color = vec![usize::MAX; self.vertex_count()];
        self.color_rec(&order, 0, k, &mut color)
    }

    fn color_rec(&self, order: &[usize], pos: usize, k: usize, color: &mut Vec<usize>) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // symmetry break: first vertex gets color 0 only
        let limit = if pos == 0 { 1 } else { k };
        'next: for c in 0..limit {
            for &w in self.neighbors(v) {
                if color[w] == c {
                    continue 'next;
                }
            }
            color[v] = c;
            if self.color_rec(order, pos + 1, k, color) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }

    /// r-fold iterated neighborhood of a subgraph H inside self, following
    /// the recursion nu^{s+1} = nu(nu^s). The vertex set of nu(H) includes
    /// V(H) in addition to the vertices adjacent to H.
    pub fn neighborhood(&self, sub: &Graph, r: usize) -> Result<Graph> {
        if !self.contains_subgraph(sub) {
            return Err(Error::Precondition("H must be a subgraph of G".into()));
        }
        let mut cur = sub.clone();
        for _ in 0..r {
            cur = self.neighborhood_once(&cur);
        }
        Ok(cur)
    }

    fn neighborhood_once(&self, sub: &Graph) -> Graph {
        let hverts: BTreeSet<usize> = sub
            .labels()
            .iter()
            .map(|l| self.index_of(l).unwrap())
            .collect();
        let mut verts: BTreeSet<usize> = hverts.clone();
        for &v in &hverts {
            verts.extend(self.neighbors(v).iter().copied());
        }
        let mut edges = Vec::new();
        for (i, j) in self.edge_pairs() {
            if hverts.contains(&i) || hverts.contains(&j) {
                edges.push((self.label(i), self.label(j)));
                verts.insert(i);
                verts.insert(j);
            }
        }
        let labels: Vec<&str> = verts.iter().map(|&v| self.label(v)).collect();
        Graph::new(&labels, &edges).unwrap()
    }
}

pub(crate) fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

// ---- graph homomorphisms -----------------------------------------------

/// A graph homomorphism, stored as target indices per source index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphHom {
    pub map: Vec<usize>,
}

impl GraphHom {
    pub fn new(source: &Graph, target: &Graph, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.vertex_count() {
            return Err(Error::Structural("homomorphism map has wrong length".into()));
        }
        let hom = GraphHom { map };
        if !hom.is_valid(source, target) {
            return Err(Error::Precondition("map does not preserve edges".into()));
        }
        Ok(hom)
    }

    /// Builds from a label-to-label mapping.
    pub fn from_labels(source: &Graph, target: &Graph, assoc: &BTreeMap<String, String>) -> Result<Self> {
        let mut map = vec![usize::MAX; source.vertex_count()];
        for (a, b) in assoc {
            let i = source
                .index_of(a)
                .ok_or_else(|| Error::Precondition(format!("unknown source vertex {a:?}")))?;
            let j = target
                .index_of(b)
                .ok_or_else(|| Error::Precondition(format!("unknown target vertex {b:?}")))?;
            map[i] = j;
        }
        if map.iter().any(|&v| v == usize::MAX) {
            return Err(Error::Precondition("map is not total on the source".into()));
        }
        GraphHom::new(source, target, map)
    }

    pub fn is_valid(&self, source: &Graph, target: &Graph) -> bool {
        source
            .edges()
            .iter()
            .all(|&(x, y)| target.has_edge(self.map[x], self.map[y]))
    }

    pub fn identity(g: &Graph) -> GraphHom {
        GraphHom { map: (0..g.vertex_count()).collect() }
    }

    /// Composition: apply `self` first, then `next`.
    pub fn then(&self, next: &GraphHom) -> GraphHom {
        GraphHom { map: self.map.iter().map(|&v| next.map[v]).collect() }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.map.iter().all(|&v| seen.insert(v))
    }

    pub fn is_bijective(&self, target: &Graph) -> bool {
        self.is_injective() && self.map.len() == target.vertex_count()
    }

    /// The image vertex set as a sorted index set in the target.
    pub fn image(&self) -> BTreeSet<usize> {
        self.map.iter().copied().collect()
    }
}

/// Enumerates all graph homomorphisms G -> H in canonical (lexicographic on
/// the map, in label order) order. Backtracks over vertices in descending
/// degree order with neighbor-consistency pruning.
pub fn enumerate_homs(g: &Graph, h: &Graph, budget: u64) -> Result<Vec<GraphHom>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(vec![GraphHom { map: vec![] }]);
    }
    if h.vertex_count() == 0 {
        return Ok(vec![]);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut assignment = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut nodes: u64 = 0;
    hom_rec(g, h, &order, 0, &mut assignment, &mut out, &mut nodes, budget)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn hom_rec(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    pos: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<GraphHom>,
    nodes: &mut u64,
    budget: u64,
) -> Result<()> {
    if pos == order.len() {
        out.push(GraphHom { map: assignment.clone() });
        return Ok(());
    }
    let v = order[pos];
    'cand: for c in 0..h.vertex_count() {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Budget { context: "homomorphism enumeration".into(), limit: budget });
        }
        if g.has_loop(v) && !h.has_loop(c) {
            continue;
        }
        for &w in g.neighbors(v) {
            if assignment[w] != usize::MAX && !h.has_edge(c, assignment[w]) {
                continue 'cand;
            }
        }
        assignment[v] = c;
        hom_rec(g, h, order, pos + 1, assignment, out, nodes, budget)?;
        assignment[v] = usize::MAX;
    }
    Ok(())
}

// ---- folds and cores ----------------------------------------------------

/// One fold step: the removed vertex and its dominating witness, as labels.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FoldStep {
    pub removed: String,
    pub witness: String,
}

/// Result of iterated folding: dismantlable vertices of the input, the fold
/// sequence actually performed, and the stiff core.
#[derive(Debug, Clone)]
pub struct FoldReport {
    pub dismantlable: Vec<FoldStep>,
    pub fold_sequence: Vec<FoldStep>,
    pub core: Graph,
}

/// Finds all dismantlable vertices of `g` with one witness each.
/// v is dismantlable when N(v) is contained in N(w) for some other w.
pub fn dismantlable_vertices(g: &Graph) -> Vec<FoldStep> {
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        if let Some(w) = dominating_witness(g, v) {
            out.push(FoldStep { removed: g.label(v).to_string(), witness: g.label(w).to_string() });
        }
    }
    out
}

fn dominating_witness(g: &Graph, v: usize) -> Option<usize> {
    (0..g.vertex_count()).find(|&w| w != v && g.neighbors(v).is_subset(g.neighbors(w)))
}

/// Greedily folds dismantlable vertices (smallest label first) until stiff.
pub fn fold_analysis(g: &Graph) -> FoldReport {
    let dismantlable = dismantlable_vertices(g);
    let mut core = g.clone();
    let mut fold_sequence = Vec::new();
    loop {
        let step = (0..core.vertex_count()).find_map(|v| {
            dominating_witness(&core, v).map(|w| (v, w))
        });
        match step {
            Some((v, w)) => {
                fold_sequence.push(FoldStep {
                    removed: core.label(v).to_string(),
                    witness: core.label(w).to_string(),
                });
                let verts: BTreeSet<usize> =
                    (0..core.vertex_count()).filter(|&u| u != v).collect();
                core = core.induced(&verts);
            }
            None => break,
        }
    }
    FoldReport { dismantlable, fold_sequence, core }
}

/// Folds with a caller-supplied choice order, used by the randomized
/// order-independence checks.
pub fn fold_with_order<F>(g: &Graph, mut pick: F) -> Graph
where
    F: FnMut(&[(usize, usize)]) -> usize,
{
    let mut core = g.clone();
    loop {
        let options: Vec<(usize, usize)> = (0..core.vertex_count())
            .filter_map(|v| dominating_witness(&core, v).map(|w| (v, w)))
            .collect();
        if options.is_empty() {
            return core;
        }
        let (v, _) = options[pick(&options) % options.len()];
        let verts: BTreeSet<usize> = (0..core.vertex_count()).filter(|&u| u != v).collect();
        core = core.induced(&verts);
    }
}

// ---- pushout -------------------------------------------------------------

/// A pushout X = Y cup_H G with its two structure maps.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub x: Graph,
    pub from_y: GraphHom,
    pub from_g: GraphHom,
}

/// Attaches G to Y along f : H -> Y, where H is a subgraph of G.
/// V(X) = V(Y) + (V(G) \ V(H)); edges are the images of E(Y) and E(G).
pub fn pushout_attach(g: &Graph, h: &Graph, y: &Graph, f: &GraphHom) -> Result<Pushout> {
    if !g.contains_subgraph(h) {
        return Err(Error::Precondition("H must be a subgraph of G".into()));
    }
    if f.map.len() != h.vertex_count() || !f.is_valid(h, y) {
        return Err(Error::Precondition("f must be a homomorphism H -> Y".into()));
    }
    let hlabels: BTreeSet<&str> = h.labels().iter().map(|s| s.as_str()).collect();
    let fresh: Vec<&str> = g
        .labels()
        .iter()
        .map(|s| s.as_str())
        .filter(|l| !hlabels.contains(l))
        .collect();
    for l in &fresh {
        if y.index_of(l).is_some() {
            return Err(Error::Precondition(format!(
                "label {l:?} appears in both Y and G \\ H; rename to keep the pushout vertex set disjoint"
            )));
        }
    }
    let mut labels: Vec<String> = y.labels().to_vec();
    labels.extend(fresh.iter().map(|s| s.to_string()));

    // where each G-vertex lands, by label
    let g_dest = |gv: usize| -> String {
        let l = g.label(gv);
        match h.index_of(l) {
            Some(hv) => y.label(f.map[hv]).to_string(),
            None => l.to_string(),
        }
    };
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, j) in y.edge_pairs() {
        edges.push((y.label(i).to_string(), y.label(j).to_string()));
    }
    for (i, j) in g.edge_pairs() {
        edges.push((g_dest(i), g_dest(j)));
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let x = Graph::new(&lrefs, &edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect::<Vec<_>>())?;
    let from_y = GraphHom {
        map: y.labels().iter().map(|l| x.index_of(l).unwrap()).collect(),
    };
    let from_g = GraphHom {
        map: (0..g.vertex_count()).map(|v| x.index_of(&g_dest(v)).unwrap()).collect(),
    };
    Ok(Pushout { x, from_y, from_g })
}

/// Seeded Erdos-Renyi style graph on vertices "v00".."vNN", loopless.
/// `edge_permille` is the per-pair edge probability in thousandths.
pub fn random_graph(n: usize, edge_permille: u32, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i:02}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_range(0..1000) < edge_permille {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(&labels, &edges).unwrap()
}

/// Small-instance graph isomorphism by backtracking, for test oracles.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.vertex_count()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.vertex_count()).map(|v| b.degree(v)).collect();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    let mut used = vec![false; b.vertex_count()];
    let mut map = vec![usize::MAX; a.vertex_count()];
    iso_rec(a, b, 0, &mut map, &mut used)
}

fn iso_rec(a: &Graph, b: &Graph, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    if v == a.vertex_count() {
        return true;
    }
    'cand: for c in 0..b.vertex_count() {
        if used[c] || a.degree(v) != b.degree(c) || a.has_loop(v) != b.has_loop(c) {
            continue;
        }
        for w in 0..v {
            if a.has_edge(v, w) != b.has_edge(c, map[w]) {
                continue 'cand;
            }
        }
        map[v] = c;
        used[c] = true;
        if iso_rec(a, b, v + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_to_k3_has_six_homs() {
        let homs = enumerate_homs(&Graph::complete(2), &Graph::complete(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(homs.len(), 6);
    }

    #[test]
    fn k3_to_k2_has_none() {
        let homs = enumerate_homs(&Graph::complete(3), &Graph::complete(2), DEFAULT_BUDGET).unwrap();
        assert!(homs.is_empty());
    }

    #[test]
    fn c5_to_k3_matches_chromatic_polynomial() {
        // chromatic polynomial of C5 at 3: (3-1)^5 + (3-1)*(-1)^5 = 30
        let homs = enumerate_homs(&Graph::cycle(5), &Graph::complete(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(homs.len(), 30);
    }

    #[test]
    fn budget_is_an_explicit_error() {
        let err = enumerate_homs(&Graph::complete(4), &Graph::complete(5), 3).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn tensor_with_sigma0_is_identity_shape() {
        let t = Graph::cycle(5);
        let p = t.tensor(&Graph::sigma(0));
        assert!(is_isomorphic(&t, &p));
    }

    #[test]
    fn k2_times_k2_is_two_disjoint_k2() {
        let p = Graph::complete(2).tensor(&Graph::complete(2));
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 2);
        assert_eq!(p.components().len(), 2);
    }

    #[test]
    fn c3_times_k2_is_c6() {
        let p = Graph::cycle(3).tensor(&Graph::complete(2));
        assert!(is_isomorphic(&p, &Graph::cycle(6)));
    }

    #[test]
    fn path_folds_to_k2() {
        let g = Graph::path(&["a", "b", "c"]);
        let report = fold_analysis(&g);
        assert_eq!(report.core.vertex_count(), 2);
        assert_eq!(report.fold_sequence.len(), 1);
        assert_eq!(report.fold_sequence[0].removed, "a");
        assert_eq!(report.fold_sequence[0].witness, "c");
        assert!(is_isomorphic(&report.core, &Graph::complete(2)));
    }

    #[test]
    fn complete_graphs_are_stiff() {
        for n in 1..=5 {
            let report = fold_analysis(&Graph::complete(n));
            assert!(report.fold_sequence.is_empty());
            assert_eq!(report.core.vertex_count(), n);
        }
    }

    #[test]
    fn looped_universal_vertex_folds_to_one() {
        let g = Graph::new(
            &["a", "b", "u"],
            &[("a", "b"), ("u", "u"), ("u", "a"), ("u", "b")],
        )
        .unwrap();
        let report = fold_analysis(&g);
        assert!(is_isomorphic(&report.core, &Graph::one()));
    }

    #[test]
    fn neighborhood_of_path_prefix() {
        let g = Graph::path(&["a", "b", "c", "d"]);
        let h = g.induced_by_labels(&["a".into(), "b".into()].into_iter().collect()).unwrap();
        let n1 = g.neighborhood(&h, 1).unwrap();
        assert_eq!(n1.labels(), &["a", "b", "c"]);
        assert_eq!(n1.edge_count(), 2);
        let n2 = g.neighborhood(&h, 2).unwrap();
        assert_eq!(n2, g);
        assert_eq!(g.neighborhood(&g, 1).unwrap(), g);
        assert_eq!(g.neighborhood(&h, 0).unwrap(), h);
    }

    #[test]
    fn neighborhood_is_monotone() {
        let g = Graph::cycle(6);
        let h = g.induced_by_labels(&["0".into()].into_iter().collect()).unwrap();
        let mut prev = h.clone();
        for r in 1..=4 {
            let cur = g.neighborhood(&h, r).unwrap();
            assert!(cur.contains_subgraph(&prev));
            assert!(g.contains_subgraph(&cur));
            prev = cur;
        }
    }

    #[test]
    fn diameter_and_chromatic_basics() {
        assert_eq!(Graph::complete(2).diameter().unwrap(), 1);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.diameter().unwrap(), 2);
        assert_eq!(c5.chromatic_number().unwrap(), 3);
        let two = Graph::new(&["a", "b"], &[]).unwrap();
        assert!(two.diameter().is_err());
    }

    #[test]
    fn schrijver_graphs() {
        // SG_{n,1} is K_n
        let sg = Graph::stable_kneser(4, 1).unwrap();
        assert!(is_isomorphic(&sg, &Graph::complete(4)));
        // SG_{5,2} is C_5
        let sg = Graph::stable_kneser(5, 2).unwrap();
        assert!(is_isomorphic(&sg, &Graph::cycle(5)));
        // SG_{6,2}: 9 vertices, 4-regular, 18 edges
        let sg = Graph::stable_kneser(6, 2).unwrap();
        assert_eq!(sg.vertex_count(), 9);
        assert_eq!(sg.edge_count(), 18);
        assert!((0..9).all(|v| sg.degree(v) == 4));
        assert_eq!(sg.chromatic_number().unwrap(), 4);
        assert!(Graph::stable_kneser(3, 2).is_err());
    }

    #[test]
    fn pushout_examples() {
        // H = G: X is Y
        let g = Graph::path(&["a", "b", "c"]);
        let y = Graph::one();
        let f = GraphHom::new(&g, &y, vec![0, 0, 0]).unwrap();
        let p = pushout_attach(&g, &g, &y, &f).unwrap();
        assert!(is_isomorphic(&p.x, &y));

        // G = path a-b-c, H = edge {b,c}, Y = one looped vertex
        let h = g.induced_by_labels(&["b".into(), "c".into()].into_iter().collect()).unwrap();
        let f = GraphHom::new(&h, &y, vec![0, 0]).unwrap();
        let p = pushout_attach(&g, &h, &y, &f).unwrap();
        assert_eq!(p.x.vertex_count(), 2);
        let star = p.x.index_of("*").unwrap();
        let a = p.x.index_of("a").unwrap();
        assert!(p.x.has_edge(a, star));
        assert!(p.x.has_loop(star));
        assert!(!p.x.has_loop(a));

        // f injective with Y = H: X is G again
        let f = GraphHom::identity(&h);
        let p = pushout_attach(&g, &h, &h, &f).unwrap();
        assert!(is_isomorphic(&p.x, &g));
    }

    #[test]
    fn pushout_square_commutes() {
        let g = Graph::path(&["a", "b", "c"]);
        let h = g.induced_by_labels(&["b".into(), "c".into()].into_iter().collect()).unwrap();
        let y = Graph::one();
        let f = GraphHom::new(&h, &y, vec![0, 0]).unwrap();
        let p = pushout_attach(&g, &h, &y, &f).unwrap();
        assert!(p.from_y.is_valid(&y, &p.x));
        assert!(p.from_g.is_valid(&g, &p.x));
        // inclusion H -> G then from_g equals f then from_y
        for hv in 0..h.vertex_count() {
            let gv = g.index_of(h.label(hv)).unwrap();
            assert_eq!(p.from_g.map[gv], p.from_y.map[f.map[hv]]);
        }
    }
}
