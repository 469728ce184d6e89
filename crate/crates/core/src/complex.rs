//! Finite (equivariant) abstract simplicial complexes: stars and iterated
//! neighborhoods, barycentric subdivision, dominated vertices, strong
//! collapse with replayable certificates, and the NDR neighborhood builder.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::Action;
use crate::poset::{
    strong_collapse_decide, CollapseDecision, OrbitRemoval, Poset,
};

/// Cap on materialized simplices for subdivision-heavy constructions.
pub const SIMPLEX_CAP: usize = 1_000_000;

/// An abstract simplicial complex stored by its maximal simplices. The full
/// face list is materialized lazily and memoized.
#[derive(Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    maximal: Vec<BTreeSet<usize>>,
    faces: OnceLock<BTreeSet<Vec<usize>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            maximal: self.maximal.clone(),
            faces: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.maximal == other.maximal
    }
}
impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), maximal: Vec::new(), faces: OnceLock::new() }
    }

    /// Builds from maximal simplices given as label sets. The vertex set is
    /// the union of the simplices; `labels` must equal that union (so every
    /// vertex lies in some simplex). Non-maximal entries are pruned.
    pub fn from_maximal<S: AsRef<str>>(labels: &[S], simplices: &[Vec<S>]) -> Result<Self> {
        let mut ls: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        ls.sort();
        ls.dedup();
        let idx = |l: &str, ls: &[String]| ls.binary_search_by(|x| x.as_str().cmp(l)).ok();
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        let mut covered: BTreeSet<usize> = BTreeSet::new();
        for s in simplices {
            let mut set = BTreeSet::new();
            for v in s {
                let i = idx(v.as_ref(), &ls).ok_or_else(|| {
                    Error::Structural(format!("simplex vertex {:?} is not declared", v.as_ref()))
                })?;
                set.insert(i);
            }
            if set.is_empty() {
                return Err(Error::Structural("empty simplex".into()));
            }
            covered.extend(set.iter().copied());
            sets.push(set);
        }
        if covered.len() != ls.len() {
            return Err(Error::Structural("every vertex must lie in some simplex".into()));
        }
        Ok(SimplicialComplex { labels: ls, maximal: prune_non_maximal(sets), faces: OnceLock::new() })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|x| x.as_str().cmp(label)).ok()
    }

    pub fn maximal_simplices(&self) -> &[BTreeSet<usize>] {
        &self.maximal
    }

    pub fn maximal_label_sets(&self) -> Vec<BTreeSet<String>> {
        self.maximal
            .iter()
            .map(|s| s.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }

    /// Largest simplex dimension, or None for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.maximal.iter().map(|s| s.len() - 1).max()
    }

    pub fn contains_idx(&self, simplex: &BTreeSet<usize>) -> bool {
        self.maximal.iter().any(|m| simplex.is_subset(m))
    }

    pub fn contains<S: AsRef<str>>(&self, simplex: &[S]) -> bool {
        let mut set = BTreeSet::new();
        for v in simplex {
            match self.index_of(v.as_ref()) {
                Some(i) => {
                    set.insert(i);
                }
                None => return false,
            }
        }
        self.contains_idx(&set)
    }

    /// All nonempty simplices, memoized, as sorted index vectors.
    pub fn all_simplices(&self) -> &BTreeSet<Vec<usize>> {
        self.faces.get_or_init(|| {
            let mut out = BTreeSet::new();
            for m in &self.maximal {
                let verts: Vec<usize> = m.iter().copied().collect();
                for mask in 1u64..(1 << verts.len()) {
                    let face: Vec<usize> = verts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    out.insert(face);
                }
            }
            out
        })
    }

    pub fn simplex_count(&self) -> usize {
        self.all_simplices().len()
    }

    pub fn simplices_of_dim(&self, d: usize) -> Vec<Vec<usize>> {
        self.all_simplices().iter().filter(|s| s.len() == d + 1).cloned().collect()
    }

    /// True when every maximal simplex of `other` is a simplex of `self`
    /// (matched by labels).
    pub fn contains_subcomplex(&self, other: &SimplicialComplex) -> bool {
        other.maximal_label_sets().iter().all(|s| {
            let refs: Vec<&String> = s.iter().collect();
            self.contains(&refs)
        })
    }

    /// The star of a vertex: simplices sigma with sigma + {v} a simplex.
    pub fn star(&self, v: usize) -> SimplicialComplex {
        let mut sets = Vec::new();
        for m in &self.maximal {
            if m.contains(&v) {
                sets.push(m.clone());
            }
        }
        self.subcomplex_from(sets)
    }

    fn subcomplex_from(&self, sets: Vec<BTreeSet<usize>>) -> SimplicialComplex {
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for s in &sets {
            verts.extend(s.iter().copied());
        }
        let labels: Vec<String> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let reindex: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let maximal = prune_non_maximal(
            sets.into_iter()
                .map(|s| s.into_iter().map(|v| reindex[&v]).collect())
                .collect(),
        );
        SimplicialComplex { labels, maximal, faces: OnceLock::new() }
    }

    /// nu^r of a subcomplex: iterated union of stars of its vertices.
    /// r = 0 returns L itself.
    pub fn neighborhood(&self, sub: &SimplicialComplex, r: usize) -> Result<SimplicialComplex> {
        if !self.contains_subcomplex(sub) {
            return Err(Error::Precondition("L must be a subcomplex of K".into()));
        }
        let mut cur = sub.clone();
        for _ in 0..r {
            let mut sets: Vec<BTreeSet<usize>> = Vec::new();
            for l in cur.labels() {
                let v = self.index_of(l).unwrap();
                for m in &self.maximal {
                    if m.contains(&v) {
                        sets.push(m.clone());
                    }
                }
            }
            if sets.is_empty() {
                // L empty: nothing to grow
                return Ok(cur);
            }
            cur = self.subcomplex_from(sets);
        }
        Ok(cur)
    }

    /// Restriction to simplices avoiding the given vertex indices.
    pub fn remove_vertices(&self, gone: &BTreeSet<usize>) -> SimplicialComplex {
        let sets: Vec<BTreeSet<usize>> = self
            .maximal
            .iter()
            .map(|m| m.difference(gone).copied().collect::<BTreeSet<usize>>())
            .filter(|s| !s.is_empty())
            .collect();
        self.subcomplex_from(sets)
    }

    /// Checks every group element acts simplicially (permutes simplices).
    pub fn validate_action(&self, action: &Action) -> Result<()> {
        if action.points() != self.labels() {
            return Err(Error::Precondition("action points do not match complex vertices".into()));
        }
        for g in 0..action.group.order() {
            for m in &self.maximal {
                let img: BTreeSet<usize> = m.iter().map(|&v| action.apply(g, v)).collect();
                if !self.contains_idx(&img) {
                    return Err(Error::Precondition(format!(
                        "act({}, -) is not simplicial",
                        action.group.label(g)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn prune_non_maximal(mut sets: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    sets.sort();
    sets.dedup();
    let keep: Vec<BTreeSet<usize>> = sets
        .iter()
        .filter(|s| !sets.iter().any(|t| *s != t && s.is_subset(t)))
        .cloned()
        .collect();
    keep
}

/// Canonical label of a simplex: member labels brace-joined in sorted order.
pub fn simplex_label(labels: &[String], simplex: &BTreeSet<usize>) -> String {
    let members: Vec<&str> = simplex.iter().map(|&v| labels[v].as_str()).collect();
    format!("{{{}}}", members.join(","))
}

// ---- face poset and barycentric subdivision ------------------------------

/// Face poset: nonempty simplices under inclusion. The optional action is
/// transported (a group element maps a simplex to its image simplex).
pub fn face_poset(k: &SimplicialComplex, action: Option<&Action>) -> Result<(Poset, Option<Action>)> {
    let simplices: Vec<Vec<usize>> = k.all_simplices().iter().cloned().collect();
    if simplices.len() > SIMPLEX_CAP {
        return Err(Error::Budget { context: "face poset".into(), limit: SIMPLEX_CAP as u64 });
    }
    let sets: Vec<BTreeSet<usize>> =
        simplices.iter().map(|s| s.iter().copied().collect()).collect();
    let labels: Vec<String> = sets.iter().map(|s| simplex_label(k.labels(), s)).collect();
    let mut rels: Vec<(String, String)> = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a.is_subset(b) {
                rels.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let rrefs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let poset = Poset::new(&lrefs, &rrefs)?;
    let fp_action = match action {
        None => None,
        Some(a) => {
            k.validate_action(a)?;
            let pos_of: BTreeMap<String, usize> = poset
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i))
                .collect();
            let mut perms = Vec::new();
            for g in 0..a.group.order() {
                let mut perm = vec![usize::MAX; poset.len()];
                for s in &sets {
                    let from = pos_of[&simplex_label(k.labels(), s)];
                    let img: BTreeSet<usize> = s.iter().map(|&v| a.apply(g, v)).collect();
                    perm[from] = pos_of[&simplex_label(k.labels(), &img)];
                }
                perms.push(perm);
            }
            Some(Action::new(a.group.clone(), a.side, poset.labels().to_vec(), perms)?)
        }
    };
    Ok((poset, fp_action))
}

/// Barycentric subdivision Sd = order complex of the face poset, iterated
/// k times, transporting the action.
pub fn barycentric_subdivision(
    k: &SimplicialComplex,
    action: Option<&Action>,
    iterations: usize,
) -> Result<(SimplicialComplex, Option<Action>)> {
    let mut cur = k.clone();
    let mut act = action.cloned();
    for _ in 0..iterations {
        let (fp, fp_action) = face_poset(&cur, act.as_ref())?;
        cur = fp.order_complex();
        act = fp_action; // order complex keeps the poset's labels and order
    }
    Ok((cur, act))
}

// ---- standard complexes --------------------------------------------------

/// The full simplex on n+1 vertices "0".."n".
pub fn full_simplex(n: usize) -> SimplicialComplex {
    let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    SimplicialComplex::from_maximal(&lrefs, &[lrefs.clone()]).unwrap()
}

/// The boundary of the n-simplex. Empty for n = 0.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::empty();
    }
    let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let facets: Vec<Vec<&str>> = (0..=n)
        .map(|skip| lrefs.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &l)| l).collect())
        .collect();
    SimplicialComplex::from_maximal(&lrefs, &facets).unwrap()
}

/// The horn: subsets sigma of [n] with sigma + {r} not equal to [n].
pub fn horn(n: usize, r: usize) -> Result<SimplicialComplex> {
    if n == 0 || r > n {
        return Err(Error::Precondition(format!("horn requires n >= 1 and 0 <= r <= n, got n={n}, r={r}")));
    }
    let labels: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let facets: Vec<Vec<&str>> = (0..=n)
        .filter(|&skip| skip != r)
        .map(|skip| lrefs.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &l)| l).collect())
        .collect();
    // for n = 1 the missing facet leaves one vertex unused
    let used: BTreeSet<&str> = facets.iter().flatten().copied().collect();
    let lrefs: Vec<&str> = lrefs.into_iter().filter(|l| used.contains(l)).collect();
    Ok(SimplicialComplex::from_maximal(&lrefs, &facets).unwrap())
}

/// (Gamma / Gamma') x K: one disjoint labeled copy of K per left coset,
/// with the group permuting copies by left multiplication. Vertex labels
/// are "c<j>.<v>".
pub fn coset_copies(
    action_group: &crate::group::FiniteGroup,
    sub: &[usize],
    k: &SimplicialComplex,
) -> Result<(SimplicialComplex, Action)> {
    if !action_group.is_subgroup(sub) {
        return Err(Error::Precondition("not a subgroup".into()));
    }
    let cosets = action_group.left_cosets(sub);
    let copy_label = |j: usize, v: &str| format!("c{j:03}.{v}");
    let mut labels = Vec::new();
    let mut simplices: Vec<Vec<String>> = Vec::new();
    for j in 0..cosets.len() {
        for v in k.labels() {
            labels.push(copy_label(j, v));
        }
        for m in k.maximal_simplices() {
            simplices.push(m.iter().map(|&v| copy_label(j, k.label(v))).collect());
        }
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let srefs: Vec<Vec<&str>> =
        simplices.iter().map(|s| s.iter().map(|x| x.as_str()).collect()).collect();
    let complex = SimplicialComplex::from_maximal(&lrefs, &srefs)?;
    // where does g send coset j: g * (coset j) = coset containing g*rep
    let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
    let mut perms = Vec::new();
    for g in 0..action_group.order() {
        let mut perm = vec![usize::MAX; complex.vertex_count()];
        for (j, coset) in cosets.iter().enumerate() {
            let dest = coset_of(action_group.mul(g, coset[0]));
            for v in k.labels() {
                let from = complex.index_of(&copy_label(j, v)).unwrap();
                let to = complex.index_of(&copy_label(dest, v)).unwrap();
                perm[from] = to;
            }
        }
        perms.push(perm);
    }
    let action = Action::new(
        action_group.clone(),
        crate::group::Side::Left,
        complex.labels().to_vec(),
        perms,
    )?;
    Ok((complex, action))
}

/// Quotient complex: orbits of vertices become vertices, simplices map to
/// their images.
pub fn quotient_complex(k: &SimplicialComplex, action: &Action, sub: &[usize]) -> Result<SimplicialComplex> {
    k.validate_action(action)?;
    if !action.group.is_subgroup(sub) {
        return Err(Error::Precondition("not a subgroup".into()));
    }
    let orbits = action.orbits(sub);
    let mut orbit_of = vec![usize::MAX; k.vertex_count()];
    let labels: Vec<String> = orbits
        .iter()
        .map(|o| crate::group::orbit_label(action.points(), o))
        .collect();
    for (j, orb) in orbits.iter().enumerate() {
        for &v in orb {
            orbit_of[v] = j;
        }
    }
    let simplices: Vec<Vec<&str>> = k
        .maximal_simplices()
        .iter()
        .map(|m| {
            m.iter()
                .map(|&v| labels[orbit_of[v]].as_str())
                .collect::<BTreeSet<&str>>()
                .into_iter()
                .collect()
        })
        .collect();
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    SimplicialComplex::from_maximal(&lrefs, &simplices)
}

/// Induced subcomplex on the vertices fixed by every element of the
/// subgroup: simplices of K all of whose vertices are fixed.
pub fn fixed_subcomplex(k: &SimplicialComplex, action: &Action, sub: &[usize]) -> Result<SimplicialComplex> {
    k.validate_action(action)?;
    if !action.group.is_subgroup(sub) {
        return Err(Error::Precondition("not a subgroup".into()));
    }
    let fixed = action.fixed_points(sub);
    let moved: BTreeSet<usize> = (0..k.vertex_count()).filter(|v| !fixed.contains(v)).collect();
    Ok(k.remove_vertices(&moved))
}

// ---- dominated vertices and strong collapse ------------------------------

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DominatedVertex {
    pub vertex: String,
    pub witness: String,
}

fn domination_witness(k: &SimplicialComplex, v: usize) -> Option<usize> {
    // v is dominated by w iff every maximal simplex containing v contains w
    (0..k.vertex_count())
        .find(|&w| w != v && k.maximal.iter().all(|m| !m.contains(&v) || m.contains(&w)))
}

/// All dominated vertices with one witness each.
pub fn dominated_vertices(k: &SimplicialComplex) -> Vec<DominatedVertex> {
    (0..k.vertex_count())
        .filter_map(|v| {
            domination_witness(k, v).map(|w| DominatedVertex {
                vertex: k.label(v).to_string(),
                witness: k.label(w).to_string(),
            })
        })
        .collect()
}

/// One greedy step at complex level: a vertex orbit removed together with
/// per-vertex domination witnesses.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VertexOrbitRemoval {
    pub vertices: Vec<String>,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ComplexCollapseDecision {
    Yes,
    /// Greedy found no dominated vertex outside L before reaching L. The
    /// greedy procedure is sufficient, not complete, at complex level.
    Stuck,
}

#[derive(Debug, Clone)]
pub struct ComplexCollapseOutcome {
    pub decision: ComplexCollapseDecision,
    pub residue: SimplicialComplex,
    pub certificate: Vec<VertexOrbitRemoval>,
}

/// Greedy dominated-vertex orbit removal toward the subcomplex L.
pub fn strong_collapse_complex(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    action: Option<&Action>,
) -> Result<ComplexCollapseOutcome> {
    if !k.contains_subcomplex(l) {
        return Err(Error::Precondition("L must be a subcomplex of K".into()));
    }
    if let Some(a) = action {
        k.validate_action(a)?;
    }
    let lverts: BTreeSet<String> = l.labels().iter().cloned().collect();
    let mut cur = k.clone();
    let mut certificate = Vec::new();
    loop {
        let pick = (0..cur.vertex_count())
            .filter(|&v| !lverts.contains(cur.label(v)))
            .find_map(|v| domination_witness(&cur, v).map(|w| (v, w)));
        let Some((v, _)) = pick else {
            let decision = if &cur == l {
                ComplexCollapseDecision::Yes
            } else {
                ComplexCollapseDecision::Stuck
            };
            return Ok(ComplexCollapseOutcome { decision, residue: cur, certificate });
        };
        // the orbit of v in the ambient action, restricted to live vertices
        let orbit_labels: BTreeSet<String> = match action {
            Some(a) => {
                let amb = a.point_index(cur.label(v)).expect("vertex in ambient carrier");
                a.orbit(&(0..a.group.order()).collect::<Vec<_>>(), amb)
                    .into_iter()
                    .map(|p| a.points()[p].clone())
                    .collect()
            }
            None => BTreeSet::from([cur.label(v).to_string()]),
        };
        let mut vertices = Vec::new();
        let mut witnesses = Vec::new();
        let mut gone = BTreeSet::new();
        for ol in &orbit_labels {
            let Some(cv) = cur.index_of(ol) else { continue };
            let w = domination_witness(&cur, cv).ok_or_else(|| {
                Error::Precondition("orbit member not dominated; greedy orbit step invalid".into())
            })?;
            vertices.push(ol.clone());
            witnesses.push(cur.label(w).to_string());
            gone.insert(cv);
        }
        certificate.push(VertexOrbitRemoval { vertices, witnesses });
        cur = cur.remove_vertices(&gone);
    }
}

/// Replays a certificate against (K, L): each removed vertex must be
/// dominated at its step, and the residue must equal L.
pub fn replay_complex_certificate(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    certificate: &[VertexOrbitRemoval],
) -> Result<bool> {
    let mut cur = k.clone();
    for step in certificate {
        let mut gone = BTreeSet::new();
        for (vl, wl) in step.vertices.iter().zip(&step.witnesses) {
            let Some(v) = cur.index_of(vl) else { return Ok(false) };
            let Some(w) = cur.index_of(wl) else { return Ok(false) };
            let dominated = cur
                .maximal
                .iter()
                .all(|m| !m.contains(&v) || m.contains(&w));
            if !dominated || v == w {
                return Ok(false);
            }
            gone.insert(v);
        }
        cur = cur.remove_vertices(&gone);
    }
    Ok(&cur == l)
}

/// Exact decision by breadth-first search of the identity component of the
/// poset of equivariant multi-maps fixing L pointwise. Only for small
/// instances: at most `max_free` vertices outside L.
pub fn exact_collapse_decide(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    action: Option<&Action>,
    max_free: usize,
) -> Result<bool> {
    if !k.contains_subcomplex(l) {
        return Err(Error::Precondition("L must be a subcomplex of K".into()));
    }
    let lverts: BTreeSet<usize> = l.labels().iter().map(|v| k.index_of(v).unwrap()).collect();
    let free: Vec<usize> = (0..k.vertex_count()).filter(|v| !lverts.contains(v)).collect();
    if free.len() > max_free {
        return Err(Error::Budget { context: "exact collapse search".into(), limit: max_free as u64 });
    }
    let n = k.vertex_count();
    if n > 63 {
        return Err(Error::Budget { context: "exact collapse search".into(), limit: 63 });
    }
    // enumerate Def(K, L): assignments per free vertex, as bitmasks
    let all_masks: Vec<u64> = (1..(1u64 << n)).collect();
    let mut elements: Vec<Vec<u64>> = Vec::new();
    let mut partial: Vec<u64> = vec![0; free.len()];
    enumerate_def(k, &lverts, &free, &all_masks, 0, &mut partial, &mut elements, action)?;
    // identity element
    let id: Vec<u64> = free.iter().map(|&v| 1u64 << v).collect();
    let Some(start) = elements.iter().position(|e| e == &id) else {
        return Ok(false);
    };
    // BFS over comparability
    let leq = |a: &Vec<u64>, b: &Vec<u64>| a.iter().zip(b).all(|(x, y)| x & y == *x);
    let mut seen = vec![false; elements.len()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    let lmask: u64 = lverts.iter().fold(0u64, |m, &v| m | 1 << v);
    while let Some(i) = queue.pop_front() {
        let e = &elements[i];
        // success: a simplicial map with image in L
        if e.iter().all(|&m| m.count_ones() == 1 && m & lmask == m) {
            return Ok(true);
        }
        for (j, f) in elements.iter().enumerate() {
            if !seen[j] && (leq(e, f) || leq(f, e)) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(false)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_def(
    k: &SimplicialComplex,
    lverts: &BTreeSet<usize>,
    free: &[usize],
    all_masks: &[u64],
    pos: usize,
    partial: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    action: Option<&Action>,
) -> Result<()> {
    if pos == free.len() {
        let assign = |v: usize| -> u64 {
            match free.iter().position(|&f| f == v) {
                Some(i) => partial[i],
                None => 1u64 << v,
            }
        };
        // multimap condition on maximal simplices
        for m in k.maximal_simplices() {
            let mut img: BTreeSet<usize> = BTreeSet::new();
            for &v in m {
                let a = assign(v);
                img.extend((0..k.vertex_count()).filter(|&x| a >> x & 1 == 1));
            }
            if !k.contains_idx(&img) {
                return Ok(());
            }
        }
        // equivariance
        if let Some(a) = action {
            for g in 0..a.group.order() {
                for v in 0..k.vertex_count() {
                    let gv = a.apply(g, v);
                    let lhs: BTreeSet<usize> = (0..k.vertex_count())
                        .filter(|&x| assign(v) >> x & 1 == 1)
                        .map(|x| a.apply(g, x))
                        .collect();
                    let rhs: BTreeSet<usize> =
                        (0..k.vertex_count()).filter(|&x| assign(gv) >> x & 1 == 1).collect();
                    if lhs != rhs {
                        return Ok(());
                    }
                }
            }
        }
        out.push(partial.clone());
        if out.len() > 200_000 {
            return Err(Error::Budget { context: "Def enumeration".into(), limit: 200_000 });
        }
        return Ok(());
    }
    let _ = lverts;
    for &m in all_masks {
        partial[pos] = m;
        enumerate_def(k, lverts, free, all_masks, pos + 1, partial, out, action)?;
    }
    partial[pos] = 0;
    Ok(())
}

// ---- NDR builder ---------------------------------------------------------

/// Output of the NDR neighborhood construction.
#[derive(Debug, Clone)]
pub struct NdrResult {
    /// Sd^r of the input pair.
    pub sd_k: SimplicialComplex,
    pub sd_l: SimplicialComplex,
    pub sd_action: Option<Action>,
    /// The neighborhood subcomplex A of Sd^r K.
    pub a: SimplicialComplex,
    /// The achieved radius 2^(r-2): nu^radius(Sd^r L) is contained in A.
    pub radius: usize,
    /// Vertex orbit removals collapsing A onto Sd^r L, replayable.
    pub certificate: Vec<VertexOrbitRemoval>,
}

/// Builds, for r >= 2, a subcomplex A of Sd^r K that contains the
/// 2^(r-2)-neighborhood of Sd^r L and strongly (Gamma-)collapses onto it.
/// At the base level A is the order complex of the chains in F Sd K that
/// meet L; higher levels subdivide that witness. Collapse certificates come
/// from greedy beat-point removal on the face posets, which is complete at
/// poset level.
pub fn ndr_builder(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    action: Option<&Action>,
    r: usize,
) -> Result<NdrResult> {
    if r < 2 {
        return Err(Error::Precondition("ndr builder requires r >= 2".into()));
    }
    if !k.contains_subcomplex(l) {
        return Err(Error::Precondition("L must be a subcomplex of K".into()));
    }
    let radius = 1usize << (r - 2);
    // trivial pair: A is all of Sd^r K
    if k == l {
        let (sd_k, sd_action) = barycentric_subdivision(k, action, r)?;
        return Ok(NdrResult {
            sd_l: sd_k.clone(),
            a: sd_k.clone(),
            sd_k,
            sd_action,
            radius,
            certificate: Vec::new(),
        });
    }

    // level 1: Sd K and Sd L
    let (sd1_k, sd1_action) = barycentric_subdivision(k, action, 1)?;
    let (sd1_l, _) = barycentric_subdivision(l, None, 1)?;
    // level 2 via the face poset of Sd K
    let (fp, fp_action) = face_poset(&sd1_k, sd1_action.as_ref())?;
    let sd2_k = fp.order_complex();
    let (sd2_l, _) = barycentric_subdivision(&sd1_l, None, 1)?;

    // P: chains of F(Sd K) containing at least one simplex of L, i.e. a
    // vertex of Sd K that lies in Sd L.
    let l_vertex: BTreeSet<String> = sd1_l.labels().iter().cloned().collect();
    let keep: BTreeSet<usize> = (0..fp.len())
        .filter(|&c| {
            // fp element c is a simplex of Sd K = a chain; check whether any
            // of its member vertices (simplices of K) lies in L
            let chain_label = fp.label(c);
            let members = chain_members(chain_label);
            members.iter().any(|m| l_vertex.contains(m.as_str()))
        })
        .collect();
    let p = fp.induced(&keep);
    let p_action = fp_action.as_ref().map(|a| restrict_action(a, p.labels()));
    let mut a_cur = p.order_complex();

    // certificate at level 2: greedy on (P, F Sd L), complete at poset level
    let (fsdl, _) = face_poset(&sd1_l, None)?;
    let target: BTreeSet<String> = fsdl.labels().iter().cloned().collect();
    let out = strong_collapse_decide(&p, Some(&target), p_action.as_ref())?;
    if out.decision != CollapseDecision::Yes {
        return Err(Error::Precondition(
            "internal: neighborhood poset failed to collapse onto Sd L".into(),
        ));
    }
    let mut cert = poset_cert_to_complex(&out.certificate);
    let mut l_cur = sd2_l;
    let mut k_cur = sd2_k;
    // the face poset of Sd K carries the action on Sd^2 K's vertices
    let mut act_cur = fp_action;

    // levels 3..r: subdivide the witness and re-derive the collapse from
    // the face poset, where greedy is complete
    for _ in 2..r {
        check_cap(&k_cur)?;
        let (fa, fa_action) = face_poset(&a_cur, act_cur.as_ref().map(|a| restrict_action_ref(a, &a_cur)).as_ref())?;
        let (fl, _) = face_poset(&l_cur, None)?;
        let target: BTreeSet<String> = fl.labels().iter().cloned().collect();
        let out = strong_collapse_decide(&fa, Some(&target), fa_action.as_ref())?;
        if out.decision != CollapseDecision::Yes {
            return Err(Error::Precondition(
                "internal: subdivided witness failed to collapse".into(),
            ));
        }
        cert = poset_cert_to_complex(&out.certificate);
        a_cur = fa.order_complex();
        let (next_k, next_act) = barycentric_subdivision(&k_cur, act_cur.as_ref(), 1)?;
        let (next_l, _) = barycentric_subdivision(&l_cur, None, 1)?;
        k_cur = next_k;
        l_cur = next_l;
        act_cur = next_act;
    }

    // containment check
    let nu = k_cur.neighborhood(&l_cur, radius)?;
    if !a_cur.contains_subcomplex(&nu) {
        return Err(Error::Precondition(
            "internal: neighborhood containment failed".into(),
        ));
    }
    if !replay_complex_certificate(&a_cur, &l_cur, &cert)? {
        return Err(Error::Precondition("internal: collapse certificate does not replay".into()));
    }
    Ok(NdrResult {
        sd_k: k_cur,
        sd_l: l_cur,
        sd_action: act_cur,
        a: a_cur,
        radius,
        certificate: cert,
    })
}

fn check_cap(k: &SimplicialComplex) -> Result<()> {
    if k.simplex_count() > SIMPLEX_CAP {
        return Err(Error::Budget { context: "ndr subdivision".into(), limit: SIMPLEX_CAP as u64 });
    }
    Ok(())
}

/// Splits a serialized chain label "{m1,m2,...}" into member labels, being
/// careful about nested braces.
fn chain_members(label: &str) -> Vec<String> {
    let inner = &label[1..label.len() - 1];
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '{' => {
                depth += 1;
                cur.push(ch);
            }
            '}' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn poset_cert_to_complex(cert: &[OrbitRemoval]) -> Vec<VertexOrbitRemoval> {
    cert.iter()
        .map(|o| VertexOrbitRemoval { vertices: o.elements.clone(), witnesses: o.witnesses.clone() })
        .collect()
}

/// Restricts an action to a subset of its points (which must be stable).
fn restrict_action(action: &Action, points: &[String]) -> Action {
    let idx: Vec<usize> = points.iter().map(|p| action.point_index(p).unwrap()).collect();
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let perms: Vec<Vec<usize>> = (0..action.group.order())
        .map(|g| idx.iter().map(|&old| pos[&action.apply(g, old)]).collect())
        .collect();
    Action::new(action.group.clone(), action.side, points.to_vec(), perms)
        .expect("restricted action stays valid")
}

fn restrict_action_ref(action: &Action, k: &SimplicialComplex) -> Action {
    restrict_action(action, k.labels())
}
