//! Hom posets of multi-homomorphisms, box complexes, the composition
//! algebra, homotopy through comparability components, deformation
//! retract certificates, and the low-dimensional singular skeleton.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{enumerate_homs, Graph, GraphHom, DEFAULT_BUDGET};
use crate::group::{Action, FiniteGroup, Side};
use crate::poset::Poset;

/// Cap on enumerated Hom poset elements.
pub const HOM_CAP: usize = 100_000;

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A multi-homomorphism: each source vertex carries a nonempty set of
/// target vertices (a bitmask over the target's vertex order) such that
/// edges map to complete bipartite edge sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiHom {
    pub masks: Vec<u64>,
}

impl MultiHom {
    pub fn from_hom(f: &GraphHom) -> MultiHom {
        MultiHom { masks: f.map.iter().map(|&t| 1u64 << t).collect() }
    }

    /// The underlying graph map when every set is a singleton.
    pub fn to_hom(&self) -> Option<GraphHom> {
        let mut map = Vec::new();
        for &m in &self.masks {
            if m.count_ones() != 1 {
                return None;
            }
            map.push(m.trailing_zeros() as usize);
        }
        Some(GraphHom { map })
    }

    pub fn leq(&self, other: &MultiHom) -> bool {
        self.masks.iter().zip(&other.masks).all(|(a, b)| a & b == *a)
    }

    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        if self.masks.len() != g.vertex_count() || h.vertex_count() > 64 {
            return false;
        }
        let hm = full_mask(h.vertex_count());
        if self.masks.iter().any(|&m| m == 0 || m & !hm != 0) {
            return false;
        }
        let nbr: Vec<u64> = neighbor_masks(h);
        g.edges().iter().all(|&(v, w)| {
            let target = common_neighbors(&nbr, self.masks[v], h.vertex_count());
            self.masks[w] & !target == 0
        })
    }

    /// Serialized form "v1:{a,b};v2:{c}" over sorted source labels.
    pub fn label(&self, g: &Graph, h: &Graph) -> String {
        let parts: Vec<String> = self
            .masks
            .iter()
            .enumerate()
            .map(|(v, &m)| {
                let targets: Vec<&str> = (0..h.vertex_count())
                    .filter(|&t| m >> t & 1 == 1)
                    .map(|t| h.label(t))
                    .collect();
                format!("{}:{{{}}}", g.label(v), targets.join(","))
            })
            .collect();
        parts.join(";")
    }
}

fn neighbor_masks(h: &Graph) -> Vec<u64> {
    (0..h.vertex_count())
        .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn common_neighbors(nbr: &[u64], mask: u64, n: usize) -> u64 {
    let mut out = full_mask(n);
    for (v, &nm) in nbr.iter().enumerate() {
        if mask >> v & 1 == 1 {
            out &= nm;
        }
    }
    out
}

/// The poset of all multi-homomorphisms from `g` to `h`, ordered by
/// pointwise inclusion. Elements are sorted canonically.
#[derive(Debug, Clone)]
pub struct HomPoset {
    pub g: Graph,
    pub h: Graph,
    pub elements: Vec<MultiHom>,
}

impl HomPoset {
    pub fn enumerate(g: &Graph, h: &Graph) -> Result<HomPoset> {
        if h.vertex_count() > 64 {
            return Err(Error::Precondition("target graph has more than 64 vertices".into()));
        }
        let nbr = neighbor_masks(h);
        let n = g.vertex_count();
        let hn = h.vertex_count();
        let mut elements = Vec::new();
        let mut masks = vec![0u64; n];
        fn rec(
            g: &Graph,
            nbr: &[u64],
            hn: usize,
            v: usize,
            masks: &mut Vec<u64>,
            out: &mut Vec<MultiHom>,
        ) -> Result<()> {
            if v == masks.len() {
                out.push(MultiHom { masks: masks.clone() });
                if out.len() > HOM_CAP {
                    return Err(Error::Budget { context: "hom poset".into(), limit: HOM_CAP as u64 });
                }
                return Ok(());
            }
            let mut base = full_mask(hn);
            for &w in g.neighbors(v) {
                if w < v {
                    base &= common_neighbors(nbr, masks[w], hn);
                }
            }
            let looped = g.has_loop(v);
            let mut m = base;
            while m != 0 {
                if !looped || m & !common_neighbors(nbr, m, hn) == 0 {
                    masks[v] = m;
                    rec(g, nbr, hn, v + 1, masks, out)?;
                }
                m = (m - 1) & base;
            }
            masks[v] = 0;
            Ok(())
        }
        rec(g, &nbr, hn, 0, &mut masks, &mut elements)?;
        elements.sort();
        Ok(HomPoset { g: g.clone(), h: h.clone(), elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn find(&self, m: &MultiHom) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn element_label(&self, i: usize) -> String {
        self.elements[i].label(&self.g, &self.h)
    }

    /// Connected components of the comparability graph, each a sorted set
    /// of element indices.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let n = self.elements.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<BTreeSet<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut set = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            while let Some(i) = queue.pop_front() {
                set.insert(i);
                for j in 0..n {
                    if comp[j] == usize::MAX
                        && (self.elements[i].leq(&self.elements[j])
                            || self.elements[j].leq(&self.elements[i]))
                    {
                        comp[j] = id;
                        queue.push_back(j);
                    }
                }
            }
            out.push(set);
        }
        out
    }

    /// A shortest comparability path between two elements, as indices, or
    /// None when they lie in different components.
    pub fn comparability_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.elements.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            if i == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for j in 0..n {
                if !seen[j]
                    && (self.elements[i].leq(&self.elements[j])
                        || self.elements[j].leq(&self.elements[i]))
                {
                    seen[j] = true;
                    prev[j] = i;
                    queue.push_back(j);
                }
            }
        }
        None
    }

    /// Export as an abstract poset over serialized element labels.
    pub fn to_poset(&self) -> Result<Poset> {
        let labels: Vec<String> = (0..self.len()).map(|i| self.element_label(i)).collect();
        let mut rels = Vec::new();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if i != j && a.leq(b) {
                    rels.push((labels[i].as_str(), labels[j].as_str()));
                }
            }
        }
        let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        // clone rels into the borrow shape Poset::new wants
        Poset::new(&lrefs, &rels)
    }

    /// The action on Hom(G, H) induced by a right action on the vertices
    /// of G: a group element precomposes with its vertex permutation. The
    /// result is a left action on the serialized elements.
    pub fn induced_action(&self, vertex_action: &Action) -> Result<Action> {
        if vertex_action.points() != self.g.labels() {
            return Err(Error::Precondition("action carrier must be the source vertex set".into()));
        }
        vertex_action.validate_on_graph(&self.g)?;
        let labels: Vec<String> = (0..self.len()).map(|i| self.element_label(i)).collect();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let pos_of: BTreeMap<&str, usize> = order
            .iter()
            .enumerate()
            .map(|(sorted, &orig)| (labels[orig].as_str(), sorted))
            .collect();
        let sorted_labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let mut perms = Vec::new();
        for g in 0..vertex_action.group.order() {
            let mut perm = vec![usize::MAX; self.len()];
            for &i in &order {
                let e = &self.elements[i];
                let img = MultiHom {
                    masks: (0..e.masks.len()).map(|v| e.masks[vertex_action.apply(g, v)]).collect(),
                };
                let j = self.find(&img).ok_or_else(|| {
                    Error::Precondition("vertex action does not preserve the hom poset".into())
                })?;
                perm[pos_of[labels[i].as_str()]] = pos_of[labels[j].as_str()];
            }
            perms.push(perm);
        }
        Action::new(vertex_action.group.clone(), Side::Left, sorted_labels, perms)
    }
}

/// Order complex of Hom(G, H), with the action induced by a right vertex
/// action on G transported along.
pub fn hom_complex(
    g: &Graph,
    h: &Graph,
    vertex_action: Option<&Action>,
) -> Result<(SimplicialComplex, Option<Action>)> {
    let hp = HomPoset::enumerate(g, h)?;
    let poset = hp.to_poset()?;
    let act = match vertex_action {
        None => None,
        Some(a) => Some(hp.induced_action(a)?),
    };
    Ok((poset.order_complex(), act))
}

// ---- composition algebra -------------------------------------------------

/// (outer * inner)(v) = union of outer(w) over w in inner(v).
pub fn compose(outer: &MultiHom, inner: &MultiHom) -> MultiHom {
    let masks = inner
        .masks
        .iter()
        .map(|&m| {
            (0..64)
                .filter(|&w| m >> w & 1 == 1)
                .fold(0u64, |acc, w| acc | outer.masks[w])
        })
        .collect();
    MultiHom { masks }
}

/// Postcomposition with a graph map f: H -> H', sending Hom(G, H) into
/// Hom(G, H').
pub fn pushforward(f: &GraphHom, eta: &MultiHom) -> MultiHom {
    let masks = eta
        .masks
        .iter()
        .map(|&m| {
            (0..64)
                .filter(|&w| m >> w & 1 == 1)
                .fold(0u64, |acc, w| acc | 1 << f.map[w])
        })
        .collect();
    MultiHom { masks }
}

/// Precomposition with a graph map f: G' -> G, sending Hom(G, H) into
/// Hom(G', H).
pub fn pullback(f: &GraphHom, eta: &MultiHom) -> MultiHom {
    MultiHom { masks: f.map.iter().map(|&v| eta.masks[v]).collect() }
}

// ---- box complex ---------------------------------------------------------

/// The poset of pairs (sigma, tau) of nonempty vertex sets with every
/// sigma-tau pair an edge, ordered componentwise, with the swap involution.
#[derive(Debug, Clone)]
pub struct BoxComplex {
    pub graph: Graph,
    pub pairs: Vec<(u64, u64)>,
    pub poset: Poset,
    /// The swap action of the two-element group on the poset elements.
    pub action: Action,
}

fn vertex_set_label(g: &Graph, mask: u64) -> String {
    let members: Vec<&str> =
        (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).map(|v| g.label(v)).collect();
    format!("{{{}}}", members.join(","))
}

pub fn box_pair_label(g: &Graph, sigma: u64, tau: u64) -> String {
    format!("({},{})", vertex_set_label(g, sigma), vertex_set_label(g, tau))
}

pub fn box_complex(g: &Graph) -> Result<BoxComplex> {
    if g.vertex_count() > 64 {
        return Err(Error::Precondition("graph has more than 64 vertices".into()));
    }
    let nbr = neighbor_masks(g);
    let n = g.vertex_count();
    let mut pairs = Vec::new();
    let all = full_mask(n);
    let mut sigma = all;
    while sigma != 0 {
        let cn = common_neighbors(&nbr, sigma, n);
        let mut tau = cn;
        while tau != 0 {
            pairs.push((sigma, tau));
            if pairs.len() > HOM_CAP {
                return Err(Error::Budget { context: "box complex".into(), limit: HOM_CAP as u64 });
            }
            tau = (tau - 1) & cn;
        }
        sigma = (sigma - 1) & all;
    }
    pairs.sort();
    let labels: Vec<String> = pairs.iter().map(|&(s, t)| box_pair_label(g, s, t)).collect();
    let mut rels = Vec::new();
    for (i, &(s1, t1)) in pairs.iter().enumerate() {
        for (j, &(s2, t2)) in pairs.iter().enumerate() {
            if i != j && s1 & s2 == s1 && t1 & t2 == t1 {
                rels.push((labels[i].as_str(), labels[j].as_str()));
            }
        }
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let poset = Poset::new(&lrefs, &rels)?;
    let mut swap = vec![usize::MAX; pairs.len()];
    for (i, &(s, t)) in pairs.iter().enumerate() {
        let from = poset.index_of(&labels[i]).unwrap();
        let to = poset.index_of(&box_pair_label(g, t, s)).unwrap();
        swap[from] = to;
    }
    let id: Vec<usize> = (0..pairs.len()).collect();
    let action = Action::new(FiniteGroup::cyclic(2), Side::Left, poset.labels().to_vec(), vec![id, swap])?;
    Ok(BoxComplex { graph: g.clone(), pairs, poset, action })
}

/// Checks the canonical equivariant order isomorphism between the box
/// poset of G and Hom(K2, G): (sigma, tau) corresponds to the assignment
/// 1 -> sigma, 2 -> tau, and the swap matches precomposition with the
/// nontrivial automorphism of K2.
pub fn box_hom_z2_isomorphic(g: &Graph) -> Result<bool> {
    let bx = box_complex(g)?;
    let k2 = Graph::complete(2);
    let hp = HomPoset::enumerate(&k2, g)?;
    if bx.pairs.len() != hp.len() {
        return Ok(false);
    }
    // the bijection
    let mut to_hom = vec![usize::MAX; bx.pairs.len()];
    for (i, &(s, t)) in bx.pairs.iter().enumerate() {
        match hp.find(&MultiHom { masks: vec![s, t] }) {
            Some(j) => to_hom[i] = j,
            None => return Ok(false),
        }
    }
    // order preservation both ways
    for (i, a) in bx.pairs.iter().enumerate() {
        for (j, b) in bx.pairs.iter().enumerate() {
            let box_leq = a.0 & b.0 == a.0 && a.1 & b.1 == a.1;
            let hom_leq = hp.elements[to_hom[i]].leq(&hp.elements[to_hom[j]]);
            if box_leq != hom_leq {
                return Ok(false);
            }
        }
    }
    // equivariance: swap on pairs vs precomposition with the K2 flip
    let (_, flip) = crate::group::z2_flip_on_k2();
    let hom_flip = hp.induced_action(&flip)?;
    for (i, &(s, t)) in bx.pairs.iter().enumerate() {
        let swapped = bx.pairs.binary_search(&(t, s)).unwrap();
        let lhs = hp.element_label(to_hom[swapped]);
        let from = hom_flip.point_index(&hp.element_label(to_hom[i])).unwrap();
        let rhs = &hom_flip.points()[hom_flip.apply(1, from)];
        if &lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- homotopy ------------------------------------------------------------

/// Number of comparability components of Hom(G, H).
pub fn pi0_hom(g: &Graph, h: &Graph) -> Result<usize> {
    Ok(HomPoset::enumerate(g, h)?.components().len())
}

/// Two graph maps are homotopic when they lie in the same component of the
/// Hom poset.
pub fn x_homotopic(g: &Graph, h: &Graph, f1: &GraphHom, f2: &GraphHom) -> Result<bool> {
    for f in [f1, f2] {
        if !f.is_valid(g, h) {
            return Err(Error::Precondition("map is not a homomorphism".into()));
        }
    }
    let hp = HomPoset::enumerate(g, h)?;
    let i = hp.find(&MultiHom::from_hom(f1)).unwrap();
    let j = hp.find(&MultiHom::from_hom(f2)).unwrap();
    Ok(hp.comparability_path(i, j).is_some())
}

/// Searches for a homotopy inverse of each candidate map G -> H. Returns
/// a witnessing pair (f, r) with r . f homotopic to the identity of G and
/// f . r homotopic to the identity of H, or None.
pub fn x_equivalence(g: &Graph, h: &Graph, budget: u64) -> Result<Option<(GraphHom, GraphHom)>> {
    let fwd = enumerate_homs(g, h, budget)?;
    let bwd = enumerate_homs(h, g, budget)?;
    if fwd.is_empty() || bwd.is_empty() {
        return Ok(None);
    }
    let hgg = HomPoset::enumerate(g, g)?;
    let hhh = HomPoset::enumerate(h, h)?;
    let comps_g = hgg.components();
    let comps_h = hhh.components();
    let comp_of = |comps: &[BTreeSet<usize>], i: usize| comps.iter().position(|c| c.contains(&i)).unwrap();
    let id_g = hgg.find(&MultiHom::from_hom(&GraphHom::identity(g))).unwrap();
    let id_h = hhh.find(&MultiHom::from_hom(&GraphHom::identity(h))).unwrap();
    let cg = comp_of(&comps_g, id_g);
    let ch = comp_of(&comps_h, id_h);
    for f in &fwd {
        for r in &bwd {
            let rf = hgg.find(&MultiHom::from_hom(&f.then(r))).unwrap();
            let fr = hhh.find(&MultiHom::from_hom(&r.then(f))).unwrap();
            if comp_of(&comps_g, rf) == cg && comp_of(&comps_h, fr) == ch {
                return Ok(Some((f.clone(), r.clone())));
            }
        }
    }
    Ok(None)
}

/// Certificate that the induced subgraph on `sub` is a deformation
/// retract: a retraction fixing `sub` pointwise together with a
/// comparability path in Hom(G, G) from the identity to it.
#[derive(Debug, Clone)]
pub struct RetractCertificate {
    pub retraction: GraphHom,
    /// Serialized Hom(G, G) elements along the path, identity first.
    pub path: Vec<String>,
}

/// Exact decision by search of the full Hom(G, G) poset.
pub fn def_retract_exact(g: &Graph, sub: &BTreeSet<String>) -> Result<Option<RetractCertificate>> {
    let subverts: Result<Vec<usize>> = sub
        .iter()
        .map(|l| {
            g.index_of(l).ok_or_else(|| Error::Precondition(format!("unknown vertex {l:?}")))
        })
        .collect();
    let subverts: BTreeSet<usize> = subverts?.into_iter().collect();
    let hp = HomPoset::enumerate(g, g)?;
    let id = hp.find(&MultiHom::from_hom(&GraphHom::identity(g))).unwrap();
    for (i, e) in hp.elements.iter().enumerate() {
        let Some(f) = e.to_hom() else { continue };
        let fixes = subverts.iter().all(|&v| f.map[v] == v);
        let lands = f.map.iter().all(|t| subverts.contains(t));
        if !(fixes && lands) {
            continue;
        }
        if let Some(path) = hp.comparability_path(id, i) {
            return Ok(Some(RetractCertificate {
                retraction: f,
                path: path.into_iter().map(|j| hp.element_label(j)).collect(),
            }));
        }
    }
    Ok(None)
}

/// Sufficient mode: greedily folds away vertices outside `sub`. When it
/// reaches exactly `sub`, the fold maps compose to a retraction and each
/// step contributes a two-edge stretch of the comparability path through
/// the pointwise union of consecutive maps.
pub fn def_retract_by_folds(g: &Graph, sub: &BTreeSet<String>) -> Result<Option<RetractCertificate>> {
    for l in sub {
        if g.index_of(l).is_none() {
            return Err(Error::Precondition(format!("unknown vertex {l:?}")));
        }
    }
    let mut cur = g.clone();
    let mut comp = GraphHom::identity(g);
    let mut path = vec![MultiHom::from_hom(&comp)];
    loop {
        let live: BTreeSet<String> = cur.labels().iter().cloned().collect();
        if live == *sub {
            let retraction = comp.clone();
            let labels = path.iter().map(|e| e.label(g, g)).collect();
            return Ok(Some(RetractCertificate { retraction, path: labels }));
        }
        let step = crate::graph::dismantlable_vertices(&cur)
            .into_iter()
            .find(|s| !sub.contains(&s.removed));
        let Some(step) = step else { return Ok(None) };
        // the fold as a self-map of g
        let fold_map: Vec<usize> = (0..g.vertex_count())
            .map(|v| {
                if g.label(v) == step.removed {
                    g.index_of(&step.witness).unwrap()
                } else {
                    v
                }
            })
            .collect();
        let fold = GraphHom { map: fold_map };
        let next = comp.then(&fold);
        let prev_mh = MultiHom::from_hom(&comp);
        let next_mh = MultiHom::from_hom(&next);
        let bridge = MultiHom {
            masks: prev_mh.masks.iter().zip(&next_mh.masks).map(|(a, b)| a | b).collect(),
        };
        path.push(bridge);
        path.push(next_mh);
        comp = next;
        let keep: BTreeSet<usize> =
            (0..cur.vertex_count()).filter(|&v| cur.label(v) != step.removed).collect();
        cur = cur.induced(&keep);
    }
}

// ---- singular skeleton ---------------------------------------------------

/// Number of n-simplices of the singular object at (T, G) for n <= 2:
/// graph maps from T x (looped complete graph on n+1 vertices) to G.
pub fn sing_simplex_count(t: &Graph, g: &Graph, n: usize) -> Result<usize> {
    if n > 2 {
        return Err(Error::Precondition("singular skeleton is computed only up to dimension 2".into()));
    }
    let src = t.tensor(&Graph::sigma(n));
    Ok(enumerate_homs(&src, g, DEFAULT_BUDGET)?.len())
}

/// pi0 of the singular object: maps T -> G modulo the relation generated
/// by the two endpoints of each 1-simplex.
pub fn pi0_sing(t: &Graph, g: &Graph) -> Result<usize> {
    pi0_sing_with_budget(t, g, DEFAULT_BUDGET)
}

pub fn pi0_sing_with_budget(t: &Graph, g: &Graph, budget: u64) -> Result<usize> {
    let src0 = t.tensor(&Graph::sigma(0));
    let verts = enumerate_homs(&src0, g, budget)?;
    if verts.is_empty() {
        return Ok(0);
    }
    // identify a 0-simplex by the induced map on T's vertices
    let endpoint = |f: &GraphHom, src: &Graph, digit: &str| -> Vec<usize> {
        (0..t.vertex_count())
            .map(|x| {
                let l = format!("({},{})", t.label(x), digit);
                f.map[src.index_of(&l).unwrap()]
            })
            .collect()
    };
    let keys: Vec<Vec<usize>> = verts.iter().map(|f| endpoint(f, &src0, "0")).collect();
    let key_index: BTreeMap<&Vec<usize>, usize> =
        keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn root(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let src1 = t.tensor(&Graph::sigma(1));
    for f in enumerate_homs(&src1, g, budget)? {
        let a = key_index[&endpoint(&f, &src1, "0")];
        let b = key_index[&endpoint(&f, &src1, "1")];
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let classes: BTreeSet<usize> = (0..verts.len()).map(|i| root(&mut parent, i)).collect();
    Ok(classes.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_k2_k2_has_two_components() {
        let k2 = Graph::complete(2);
        let hp = HomPoset::enumerate(&k2, &k2).unwrap();
        assert_eq!(hp.len(), 2);
        assert_eq!(hp.components().len(), 2);
    }

    #[test]
    fn hom_k2_k3_is_connected_hexagon_boundaryish() {
        let hp = HomPoset::enumerate(&Graph::complete(2), &Graph::complete(3)).unwrap();
        assert_eq!(hp.len(), 12);
        assert_eq!(hp.components().len(), 1);
    }

    #[test]
    fn box_element_counts_small_complete_graphs() {
        assert_eq!(box_complex(&Graph::complete(2)).unwrap().pairs.len(), 2);
        assert_eq!(box_complex(&Graph::complete(3)).unwrap().pairs.len(), 12);
        assert_eq!(box_complex(&Graph::complete(4)).unwrap().pairs.len(), 50);
        assert_eq!(box_complex(&Graph::complete(5)).unwrap().pairs.len(), 180);
    }

    #[test]
    fn box_is_hom_from_edge() {
        for g in [Graph::complete(3), Graph::cycle(5), Graph::path(&["a", "b", "c"])] {
            assert!(box_hom_z2_isomorphic(&g).unwrap());
        }
    }

    #[test]
    fn box_poset_of_k2_is_two_points() {
        let bx = box_complex(&Graph::complete(2)).unwrap();
        assert_eq!(bx.poset.pi0().len(), 2);
        // the swap exchanges them
        assert_eq!(bx.action.apply(1, 0), 1);
    }

    #[test]
    fn composition_matches_pointwise_union() {
        // eta: v -> {a, b}; tau takes a -> {x}, b -> {x, y}
        let eta = MultiHom { masks: vec![0b11] };
        let tau = MultiHom { masks: vec![0b01, 0b11] };
        assert_eq!(compose(&tau, &eta).masks, vec![0b11]);
    }

    #[test]
    fn pullback_and_pushforward_shapes() {
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        let inc = enumerate_homs(&k2, &k3, DEFAULT_BUDGET).unwrap().remove(0);
        let eta = MultiHom { masks: vec![0b1, 0b10] };
        assert_eq!(pushforward(&inc, &eta).masks.len(), 2);
        assert_eq!(pullback(&GraphHom::identity(&k2), &eta), eta);
    }

    #[test]
    fn constant_maps_to_loop_are_homotopic() {
        // in a looped target every pair of maps is homotopic
        let g = Graph::complete(3);
        let one = Graph::one();
        let homs = enumerate_homs(&g, &one, DEFAULT_BUDGET).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(pi0_hom(&g, &one).unwrap(), 1);
    }

    #[test]
    fn identity_and_flip_on_k2() {
        let k2 = Graph::complete(2);
        let id = GraphHom::identity(&k2);
        let flip = GraphHom { map: vec![1, 0] };
        assert!(!x_homotopic(&k2, &k2, &id, &flip).unwrap());
    }

    #[test]
    fn path_is_equivalent_to_edge() {
        let p = Graph::path(&["a", "b", "c", "d"]);
        let k2 = Graph::complete(2);
        assert!(x_equivalence(&p, &k2, DEFAULT_BUDGET).unwrap().is_some());
        // but an edge is not equivalent to a triangle
        assert!(x_equivalence(&Graph::complete(3), &k2, DEFAULT_BUDGET).unwrap().is_none());
    }

    #[test]
    fn retract_certificates_on_a_path() {
        let p = Graph::path(&["a", "b", "c"]);
        let sub: BTreeSet<String> = ["a".to_string(), "b".to_string()].into();
        let exact = def_retract_exact(&p, &sub).unwrap().expect("retract exists");
        assert!(exact.retraction.map.iter().all(|&t| t < 2));
        let folds = def_retract_by_folds(&p, &sub).unwrap().expect("fold route exists");
        assert_eq!(folds.retraction.map[2], 0);
        // both paths start at the identity
        assert_eq!(exact.path.first(), folds.path.first());
    }

    #[test]
    fn no_retract_from_triangle_to_edge() {
        let k3 = Graph::complete(3);
        let sub: BTreeSet<String> = ["1".to_string(), "2".to_string()].into();
        assert!(def_retract_exact(&k3, &sub).unwrap().is_none());
        assert!(def_retract_by_folds(&k3, &sub).unwrap().is_none());
    }

    #[test]
    fn sing_pi0_examples() {
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        assert_eq!(pi0_sing(&k2, &k2).unwrap(), 2);
        assert_eq!(pi0_sing(&k2, &k3).unwrap(), 1);
        assert_eq!(pi0_sing(&k2, &k2).unwrap(), pi0_hom(&k2, &k2).unwrap());
        assert_eq!(pi0_sing(&k2, &k3).unwrap(), pi0_hom(&k2, &k3).unwrap());
    }

    #[test]
    fn sing_skeleton_caps_dimension() {
        let k2 = Graph::complete(2);
        assert!(sing_simplex_count(&k2, &k2, 3).is_err());
        assert_eq!(sing_simplex_count(&k2, &k2, 0).unwrap(), 2);
    }

    #[test]
    fn hom_from_looped_point_is_clique_poset_of_looped_part() {
        // loops on a and b, edge a-b, loopless pendant c
        let g = Graph::new(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "c")],
        )
        .unwrap();
        let hp = HomPoset::enumerate(&Graph::one(), &g).unwrap();
        // cliques of the looped subgraph: {a}, {b}, {a,b}
        assert_eq!(hp.len(), 3);
    }

    #[test]
    fn no_retract_from_cycle_to_edge() {
        let c5 = Graph::cycle(5);
        let sub: BTreeSet<String> = ["0".to_string(), "1".to_string()].into();
        assert!(def_retract_exact(&c5, &sub).unwrap().is_none());
        assert!(def_retract_by_folds(&c5, &sub).unwrap().is_none());
    }

    #[test]
    fn hom_poset_export_round_trip() {
        let hp = HomPoset::enumerate(&Graph::complete(2), &Graph::complete(3)).unwrap();
        let p = hp.to_poset().unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.pi0().len(), 1);
        // order complex is homologically a circle
        let oc = p.order_complex();
        assert_eq!(crate::homology::reduced_betti(&oc, 2), vec![0, 1, 0]);
    }

    #[test]
    fn induced_action_on_hom_k2_g() {
        let g = Graph::cycle(5);
        let hp = HomPoset::enumerate(&Graph::complete(2), &g).unwrap();
        let (_, flip) = crate::group::z2_flip_on_k2();
        let a = hp.induced_action(&flip).unwrap();
        assert!(a.validate_axioms().is_ok());
    }
}
