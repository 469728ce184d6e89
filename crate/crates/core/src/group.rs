//! Explicit finite groups, their subgroup lattices, and validated actions
//! on graphs (poset and complex carriers validate in their own modules).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{enumerate_homs, Graph, GraphHom};

/// A finite group given by a full multiplication table on element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

/// Outcome of table validation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ValidationVerdict {
    Pass,
    StructuralError(String),
    AxiomFailure { axiom: String, witness: String },
}

/// Checks a raw table: totality first (structural), then the group axioms.
pub fn validate_group_table(labels: &[String], mul: &[Vec<usize>]) -> ValidationVerdict {
    let n = labels.len();
    if mul.len() != n || mul.iter().any(|row| row.len() != n) {
        return ValidationVerdict::StructuralError("multiplication table is not total".into());
    }
    for row in mul {
        for &v in row {
            if v >= n {
                return ValidationVerdict::StructuralError(format!(
                    "table entry {v} out of range for {n} elements"
                ));
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g));
    let Some(e) = identity else {
        return ValidationVerdict::AxiomFailure {
            axiom: "two-sided identity".into(),
            witness: "no element acts as identity".into(),
        };
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return ValidationVerdict::AxiomFailure {
                        axiom: "associativity".into(),
                        witness: format!("({}, {}, {})", labels[a], labels[b], labels[c]),
                    };
                }
            }
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| mul[a][b] == e && mul[b][a] == e) {
            return ValidationVerdict::AxiomFailure {
                axiom: "inverses".into(),
                witness: labels[a].clone(),
            };
        }
    }
    ValidationVerdict::Pass
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        match validate_group_table(&labels, &mul) {
            ValidationVerdict::Pass => {}
            ValidationVerdict::StructuralError(m) => return Err(Error::Structural(m)),
            ValidationVerdict::AxiomFailure { axiom, witness } => {
                return Err(Error::Precondition(format!(
                    "group axiom failed: {axiom} (witness {witness})"
                )))
            }
        }
        let n = labels.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .unwrap();
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == identity).unwrap())
            .collect();
        Ok(FiniteGroup { labels, mul, identity, inv })
    }

    pub fn trivial() -> Self {
        FiniteGroup::new(vec!["e".into()], vec![vec![0]]).unwrap()
    }

    /// Cyclic group of order n with labels "0".."n-1" and addition mod n.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(labels, mul).unwrap()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// All subgroups, each a sorted element index set, in canonical order
    /// (by size, then lexicographic). Exhaustive closure, desk scale.
    pub fn subgroup_lattice(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        let triv = vec![self.identity];
        found.insert(triv.clone());
        queue.push_back(triv);
        while let Some(h) = queue.pop_front() {
            for g in 0..self.order() {
                if h.contains(&g) {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let closed = self.closure(&gens);
                if found.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Closure of a subset under multiplication and inverse.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().collect();
        set.insert(self.identity);
        loop {
            let mut next = set.clone();
            for &a in &set {
                next.insert(self.inv[a]);
                for &b in &set {
                    next.insert(self.mul[a][b]);
                }
            }
            if next == set {
                return set.into_iter().collect();
            }
            set = next;
        }
    }

    pub fn is_subgroup(&self, sub: &[usize]) -> bool {
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv[a]))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul[a][b])))
    }

    /// Left cosets g*sub, each sorted, in canonical order.
    pub fn left_cosets(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen.contains(&g) {
                continue;
            }
            let mut coset: Vec<usize> = sub.iter().map(|&h| self.mul[g][h]).collect();
            coset.sort();
            coset.dedup();
            seen.extend(coset.iter().copied());
            out.push(coset);
        }
        out.sort();
        out
    }
}

/// Which side the group acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// An action of a finite group on a set of labeled points, one permutation
/// per group element. Carrier-specific automorphism checks live with the
/// carrier types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub group: FiniteGroup,
    pub side: Side,
    points: Vec<String>,
    perms: Vec<Vec<usize>>,
}

impl Action {
    pub fn new(group: FiniteGroup, side: Side, points: Vec<String>, perms: Vec<Vec<usize>>) -> Result<Self> {
        let a = Action { group, side, points, perms };
        a.validate_axioms()?;
        Ok(a)
    }

    /// Trivial action of the trivial group on the given points.
    pub fn trivial(points: Vec<String>) -> Self {
        let n = points.len();
        Action {
            group: FiniteGroup::trivial(),
            side: Side::Left,
            points,
            perms: vec![(0..n).collect()],
        }
    }

    /// Action of an arbitrary group fixing every point.
    pub fn trivial_for(group: FiniteGroup, points: Vec<String>) -> Self {
        let n = points.len();
        let perms = vec![(0..n).collect::<Vec<_>>(); group.order()];
        Action { group, side: Side::Left, points, perms }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    /// The image of point `p` under group element `g`.
    pub fn apply(&self, g: usize, p: usize) -> usize {
        self.perms[g][p]
    }

    pub fn perm(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    /// Identity acts as identity; compatibility with the side's composition
    /// law; every map is a bijection.
    pub fn validate_axioms(&self) -> Result<()> {
        let n = self.points.len();
        if self.perms.len() != self.group.order() {
            return Err(Error::Structural("one permutation required per group element".into()));
        }
        for (g, perm) in self.perms.iter().enumerate() {
            if perm.len() != n || perm.iter().collect::<BTreeSet<_>>().len() != n {
                return Err(Error::Precondition(format!(
                    "act({}, -) is not a bijection of the carrier",
                    self.group.label(g)
                )));
            }
        }
        let e = self.group.identity();
        for p in 0..n {
            if self.perms[e][p] != p {
                return Err(Error::Precondition("identity does not act as identity".into()));
            }
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                for p in 0..n {
                    let (lhs, rhs) = match self.side {
                        // act(g, act(h, x)) = act(gh, x)
                        Side::Left => (
                            self.perms[g][self.perms[h][p]],
                            self.perms[self.group.mul(g, h)][p],
                        ),
                        // act(act(x, g), h) = act(x, gh)
                        Side::Right => (
                            self.perms[h][self.perms[g][p]],
                            self.perms[self.group.mul(g, h)][p],
                        ),
                    };
                    if lhs != rhs {
                        return Err(Error::Precondition(format!(
                            "action not compatible with multiplication at ({}, {})",
                            self.group.label(g),
                            self.group.label(h)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that the carrier points match the graph and every element acts
    /// as a graph automorphism.
    pub fn validate_on_graph(&self, g: &Graph) -> Result<()> {
        if self.points != g.labels() {
            return Err(Error::Precondition("action points do not match graph vertices".into()));
        }
        for gi in 0..self.group.order() {
            let perm = &self.perms[gi];
            for (x, y) in g.edges() {
                if !g.has_edge(perm[x], perm[y]) {
                    return Err(Error::Precondition(format!(
                        "act({}, -) is not a graph automorphism: edge ({}, {}) breaks",
                        self.group.label(gi),
                        g.label(x),
                        g.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Orbit of a point under the whole group (or a subgroup).
    pub fn orbit(&self, sub: &[usize], p: usize) -> BTreeSet<usize> {
        sub.iter().map(|&g| self.perms[g][p]).collect()
    }

    /// All orbits under a subgroup, sorted by minimum point.
    pub fn orbits(&self, sub: &[usize]) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.points.len()];
        let mut out = Vec::new();
        for p in 0..self.points.len() {
            if seen[p] {
                continue;
            }
            let orb = self.orbit(sub, p);
            for &q in &orb {
                seen[q] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Points fixed by every element of the subgroup.
    pub fn fixed_points(&self, sub: &[usize]) -> BTreeSet<usize> {
        (0..self.points.len())
            .filter(|&p| sub.iter().all(|&g| self.perms[g][p] == p))
            .collect()
    }

    /// Closes a set of generator permutations (given as label maps on the
    /// carrier) into a full group with the composition convention of `side`.
    /// Element labels are the image tuples in carrier order.
    pub fn from_generators(points: &[String], gens: &[BTreeMap<String, String>], side: Side) -> Result<Action> {
        let n = points.len();
        let index: BTreeMap<&str, usize> = points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let mut gen_perms: Vec<Vec<usize>> = Vec::new();
        for g in gens {
            let mut perm: Vec<usize> = (0..n).collect();
            for (src, img) in g {
                let i = *index
                    .get(src.as_str())
                    .ok_or_else(|| Error::Parse(format!("generator maps unknown point {src:?}")))?;
                let j = *index
                    .get(img.as_str())
                    .ok_or_else(|| Error::Parse(format!("generator image {img:?} is not a point")))?;
                perm[i] = j;
            }
            if perm.iter().collect::<BTreeSet<_>>().len() != n {
                return Err(Error::Parse("generator is not a permutation".into()));
            }
            gen_perms.push(perm);
        }
        close_permutations(points, &gen_perms, side)
    }

    /// Transports this action along a relabeling of the same points, given
    /// new points where `new_points[i]` corresponds to `old order` via the
    /// provided index map old -> new.
    pub fn relabel(&self, new_points: Vec<String>, old_to_new: &[usize]) -> Action {
        let n = new_points.len();
        let mut new_to_old = vec![usize::MAX; n];
        for (old, &new) in old_to_new.iter().enumerate() {
            new_to_old[new] = old;
        }
        let perms = self
            .perms
            .iter()
            .map(|perm| (0..n).map(|p| old_to_new[perm[new_to_old[p]]]).collect())
            .collect();
        Action { group: self.group.clone(), side: self.side, points: new_points, perms }
    }
}

/// Closes explicit permutations to a group. Composition convention:
/// Left side: (g*h)(x) = g(h(x)); Right side: x.(g*h) = (x.g).h.
pub fn close_permutations(points: &[String], gen_perms: &[Vec<usize>], side: Side) -> Result<Action> {
    let n = points.len();
    let id: Vec<usize> = (0..n).collect();
    let mut elems: Vec<Vec<usize>> = vec![id.clone()];
    let mut seen: BTreeSet<Vec<usize>> = elems.iter().cloned().collect();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gen_perms {
            let q: Vec<usize> = match side {
                Side::Left => (0..n).map(|x| g[p[x]]).collect(),
                Side::Right => (0..n).map(|x| g[p[x]]).collect(),
            };
            if seen.insert(q.clone()) {
                elems.push(q.clone());
                queue.push_back(q);
            }
        }
        if elems.len() > 100_000 {
            return Err(Error::Budget { context: "permutation closure".into(), limit: 100_000 });
        }
    }
    elems.sort();
    let label_of = |perm: &[usize]| -> String {
        let imgs: Vec<&str> = perm.iter().map(|&i| points[i].as_str()).collect();
        format!("[{}]", imgs.join(" "))
    };
    let labels: Vec<String> = elems.iter().map(|p| label_of(p)).collect();
    let find = |perm: &Vec<usize>| elems.binary_search(perm).unwrap();
    let mut mul = vec![vec![0usize; elems.len()]; elems.len()];
    for (a, pa) in elems.iter().enumerate() {
        for (b, pb) in elems.iter().enumerate() {
            let prod: Vec<usize> = match side {
                // left: (a*b)(x) = a(b(x))
                Side::Left => (0..n).map(|x| pa[pb[x]]).collect(),
                // right: x.(a*b) = (x.a).b, so as a function b after a
                Side::Right => (0..n).map(|x| pb[pa[x]]).collect(),
            };
            mul[a][b] = find(&prod);
        }
    }
    let group = FiniteGroup::new(labels, mul)?;
    Action::new(group, side, points.to_vec(), elems)
}

/// The automorphism group of a graph as a right action on its vertices.
pub fn automorphism_action(g: &Graph, budget: u64) -> Result<Action> {
    let autos = automorphisms(g, budget)?;
    let perms: Vec<Vec<usize>> = autos.into_iter().map(|h| h.map).collect();
    close_permutations(g.labels(), &perms, Side::Right)
}

fn automorphisms(g: &Graph, budget: u64) -> Result<Vec<GraphHom>> {
    Ok(enumerate_homs(g, g, budget)?
        .into_iter()
        .filter(|h| h.is_bijective(g))
        .collect())
}

/// Endomorphism/automorphism analysis of a graph.
#[derive(Debug, Clone)]
pub struct EndoReport {
    pub endo_count: usize,
    pub all_endos_are_autos: bool,
    pub aut: Action,
}

pub fn endo_auto_analysis(g: &Graph, budget: u64) -> Result<EndoReport> {
    let endos = enumerate_homs(g, g, budget)?;
    let autos: Vec<&GraphHom> = endos.iter().filter(|h| h.is_bijective(g)).collect();
    let all = autos.len() == endos.len();
    let perms: Vec<Vec<usize>> = autos.iter().map(|h| h.map.clone()).collect();
    let aut = close_permutations(g.labels(), &perms, Side::Right)?;
    Ok(EndoReport { endo_count: endos.len(), all_endos_are_autos: all, aut })
}

// ---- quotients and fixed points for graph carriers ----------------------

/// Canonical label of an orbit: member labels brace-joined in sorted order.
pub fn orbit_label(points: &[String], orbit: &BTreeSet<usize>) -> String {
    let members: Vec<&str> = orbit.iter().map(|&p| points[p].as_str()).collect();
    format!("{{{}}}", members.join(","))
}

/// Quotient of a graph by a subgroup of a validated action: orbits become
/// vertices, edges map forward (an edge inside one orbit becomes a loop).
pub fn quotient_graph(g: &Graph, action: &Action, sub: &[usize]) -> Result<(Graph, GraphHom)> {
    action.validate_on_graph(g)?;
    if !action.group.is_subgroup(sub) {
        return Err(Error::Precondition("not a subgroup".into()));
    }
    let orbits = action.orbits(sub);
    let mut orbit_of = vec![usize::MAX; g.vertex_count()];
    for (k, orb) in orbits.iter().enumerate() {
        for &p in orb {
            orbit_of[p] = k;
        }
    }
    let labels: Vec<String> = orbits.iter().map(|o| orbit_label(action.points(), o)).collect();
    let mut edges = Vec::new();
    for (i, j) in g.edge_pairs() {
        edges.push((labels[orbit_of[i]].clone(), labels[orbit_of[j]].clone()));
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let erefs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let q = Graph::new(&lrefs, &erefs)?;
    let proj = GraphHom {
        map: (0..g.vertex_count())
            .map(|v| q.index_of(&labels[orbit_of[v]]).unwrap())
            .collect(),
    };
    Ok((q, proj))
}

/// Induced subgraph on the vertices fixed by every element of the subgroup.
pub fn fixed_subgraph(g: &Graph, action: &Action, sub: &[usize]) -> Result<Graph> {
    action.validate_on_graph(g)?;
    if !action.group.is_subgroup(sub) {
        return Err(Error::Precondition("not a subgroup".into()));
    }
    Ok(g.induced(&action.fixed_points(sub)))
}

/// The flip action of Z2 on K2.
pub fn z2_flip_on_k2() -> (Graph, Action) {
    let k2 = Graph::complete(2);
    let gens = vec![[("1".to_string(), "2".to_string()), ("2".to_string(), "1".to_string())]
        .into_iter()
        .collect()];
    let action = Action::from_generators(k2.labels(), &gens, Side::Right).unwrap();
    (k2, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_flip_on_k2_validates() {
        let (k2, action) = z2_flip_on_k2();
        assert_eq!(action.group.order(), 2);
        assert!(action.validate_on_graph(&k2).is_ok());
    }

    #[test]
    fn swap_on_path_is_not_an_automorphism() {
        let g = Graph::path(&["a", "b", "c"]);
        let id: Vec<usize> = (0..3).collect();
        let swap = vec![1, 0, 2]; // swap a and b
        let action = Action::new(
            FiniteGroup::cyclic(2),
            Side::Left,
            g.labels().to_vec(),
            vec![id, swap],
        )
        .unwrap();
        assert!(action.validate_on_graph(&g).is_err());
    }

    #[test]
    fn table_without_identity_is_axiom_failure() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let mul = vec![vec![0, 0], vec![0, 0]];
        match validate_group_table(&labels, &mul) {
            ValidationVerdict::AxiomFailure { axiom, .. } => assert_eq!(axiom, "two-sided identity"),
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn non_total_table_is_structural() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let mul = vec![vec![0, 1]];
        assert!(matches!(
            validate_group_table(&labels, &mul),
            ValidationVerdict::StructuralError(_)
        ));
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(FiniteGroup::trivial().subgroup_lattice().len(), 1);
        assert_eq!(FiniteGroup::cyclic(2).subgroup_lattice().len(), 2);
        // S3 as Aut(K3): 6 subgroups
        let aut = automorphism_action(&Graph::complete(3), crate::graph::DEFAULT_BUDGET).unwrap();
        assert_eq!(aut.group.order(), 6);
        let subs = aut.group.subgroup_lattice();
        assert_eq!(subs.len(), 6);
        let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &subs {
            *by_order.entry(s.len()).or_insert(0) += 1;
            assert!(aut.group.is_subgroup(s));
        }
        assert_eq!(by_order, [(1, 1), (2, 3), (3, 1), (6, 1)].into_iter().collect());
    }

    #[test]
    fn quotient_k2_by_flip_is_one() {
        let (k2, action) = z2_flip_on_k2();
        let all: Vec<usize> = (0..2).collect();
        let (q, proj) = quotient_graph(&k2, &action, &all).unwrap();
        assert!(crate::graph::is_isomorphic(&q, &Graph::one()));
        assert!(proj.is_valid(&k2, &q));
    }

    #[test]
    fn quotient_c6_by_rotation3_is_k3() {
        let c6 = Graph::cycle(6);
        let rot3: BTreeMap<String, String> =
            (0..6).map(|i| (i.to_string(), ((i + 3) % 6).to_string())).collect();
        let action = Action::from_generators(c6.labels(), &[rot3], Side::Right).unwrap();
        assert!(action.validate_on_graph(&c6).is_ok());
        let all: Vec<usize> = (0..action.group.order()).collect();
        let (q, _) = quotient_graph(&c6, &action, &all).unwrap();
        assert!(crate::graph::is_isomorphic(&q, &Graph::complete(3)));
        assert!(!q.has_any_loop());
    }

    #[test]
    fn projection_is_equivariantly_constant() {
        // composing act(g, -) with the projection equals the projection
        let c6 = Graph::cycle(6);
        let rot: BTreeMap<String, String> =
            (0..6).map(|i| (i.to_string(), ((i + 1) % 6).to_string())).collect();
        let action = Action::from_generators(c6.labels(), &[rot], Side::Right).unwrap();
        for sub in action.group.subgroup_lattice() {
            let (_, proj) = quotient_graph(&c6, &action, &sub).unwrap();
            for &g in &sub {
                for v in 0..6 {
                    assert_eq!(proj.map[action.apply(g, v)], proj.map[v]);
                }
            }
        }
    }

    #[test]
    fn fixed_points_of_trivial_subgroup_is_everything() {
        let (k2, action) = z2_flip_on_k2();
        let fixed = fixed_subgraph(&k2, &action, &[action.group.identity()]).unwrap();
        assert_eq!(fixed, k2);
        let none = fixed_subgraph(&k2, &action, &[0, 1]).unwrap();
        assert_eq!(none.vertex_count(), 0);
    }

    #[test]
    fn k3_endos_are_autos() {
        let report = endo_auto_analysis(&Graph::complete(3), crate::graph::DEFAULT_BUDGET).unwrap();
        assert_eq!(report.endo_count, 6);
        assert!(report.all_endos_are_autos);
        assert_eq!(report.aut.group.order(), 6);
    }

    #[test]
    fn c5_aut_is_dihedral_order_10() {
        let report = endo_auto_analysis(&Graph::cycle(5), crate::graph::DEFAULT_BUDGET).unwrap();
        assert!(report.all_endos_are_autos);
        assert_eq!(report.aut.group.order(), 10);
    }

    #[test]
    fn path_has_non_auto_endos() {
        let report = endo_auto_analysis(&Graph::path(&["a", "b", "c"]), crate::graph::DEFAULT_BUDGET).unwrap();
        assert!(!report.all_endos_are_autos);
    }

    #[test]
    fn right_action_convention_closes() {
        // Aut(C5) acts on the right; the action axioms must hold as stated
        let action = automorphism_action(&Graph::cycle(5), crate::graph::DEFAULT_BUDGET).unwrap();
        assert_eq!(action.side, Side::Right);
        assert!(action.validate_axioms().is_ok());
        assert!(action.validate_on_graph(&Graph::cycle(5)).is_ok());
    }
}
