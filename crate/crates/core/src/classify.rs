//! Classification of subdiagrams as elliptic, parabolic, Lanner, or
//! indefinite, together with subset enumeration over a Coxeter diagram.
//!
//! All decisions run on the raw integer Gram matrix: a diagonal rescaling by
//! the (positive) norms preserves definiteness and rank, so no square roots
//! are ever needed.

use std::collections::HashSet;

use crate::diagram::{CoxeterDiagram, EdgeLabel};
use crate::error::EnumerationBudgetExceeded;
use crate::linalg::{qq, symmetric_definiteness, Definiteness, Qq};

/// Default cap on enumerated subsets; diagrams here stay far below it.
pub const DEFAULT_ENUM_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Elliptic,
    Parabolic,
    Lanner,
    Indefinite,
}

/// Irreducible diagram types that occur with edge labels in {3, 4, 6}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    AffineE(usize),
    AffineF4,
    AffineG2,
    /// Shape outside the recognized tables (never elliptic or parabolic).
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiagramClass {
    pub kind: Kind,
    /// (type, rank) per connected component, sorted.
    pub components: Vec<(ComponentType, usize)>,
    /// Elliptic: vertex count. Parabolic: vertices - components.
    /// Otherwise the matrix rank.
    pub rank: usize,
    /// Set when the subset contains a dashed edge (a broken-line branch).
    pub broken_line: bool,
}

fn subset_vertices(mask: u64) -> Vec<usize> {
    let mut v = Vec::new();
    let mut s = mask;
    while s != 0 {
        v.push(s.trailing_zeros() as usize);
        s &= s - 1;
    }
    v
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1 << v))
}

fn raw_submatrix(d: &CoxeterDiagram, verts: &[usize]) -> Vec<Vec<Qq>> {
    verts
        .iter()
        .map(|&i| verts.iter().map(|&j| qq(d.gram().raw(i, j))).collect())
        .collect()
}

/// Connected components of `mask` under the diagram's edges.
pub fn components(d: &CoxeterDiagram, mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = mask;
    while left != 0 {
        let seed = left & left.wrapping_neg();
        let mut comp = seed;
        loop {
            let grown = comp | (d_boundary_within(d, comp) & mask);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn d_boundary_within(d: &CoxeterDiagram, comp: u64) -> u64 {
    let mut b = 0u64;
    let mut s = comp;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        b |= d.neighbors(v);
    }
    b
}

fn has_dashed(d: &CoxeterDiagram, mask: u64) -> bool {
    let verts = subset_vertices(mask);
    for (a, &i) in verts.iter().enumerate() {
        for &j in &verts[a + 1..] {
            if d.label(i, j) == Some(EdgeLabel::Dashed) {
                return true;
            }
        }
    }
    false
}

/// Classify a subset of the diagram's vertices.
pub fn classify_subdiagram(d: &CoxeterDiagram, subset: &[usize]) -> SubdiagramClass {
    classify_mask(d, mask_of(subset))
}

pub fn classify_mask(d: &CoxeterDiagram, mask: u64) -> SubdiagramClass {
    assert!(mask != 0, "subset must be nonempty");
    let broken_line = has_dashed(d, mask);
    let comps = components(d, mask);
    let mut names = Vec::new();
    let mut all_elliptic = true;
    let mut all_affine = true;
    let mut rank = 0usize;
    let mut indefinite = false;
    for &comp in &comps {
        let verts = subset_vertices(comp);
        let sub = raw_submatrix(d, &verts);
        match symmetric_definiteness(&sub) {
            Definiteness::PositiveDefinite => {
                all_affine = false;
                rank += verts.len();
                names.push((
                    recognize_elliptic(d, &verts).unwrap_or(ComponentType::Other),
                    verts.len(),
                ));
            }
            Definiteness::SemidefiniteSingular(r) => {
                all_elliptic = false;
                // A connected affine component has corank exactly 1.
                if r == verts.len() - 1 {
                    rank += r;
                    names.push((
                        recognize_affine(d, &verts).unwrap_or(ComponentType::Other),
                        r,
                    ));
                } else {
                    all_affine = false;
                    rank += r;
                    names.push((ComponentType::Other, r));
                }
            }
            Definiteness::Indefinite => {
                all_elliptic = false;
                all_affine = false;
                indefinite = true;
                rank += verts.len(); // signature (k-1, 1) in practice
                names.push((ComponentType::Other, verts.len()));
            }
        }
    }
    names.sort();
    let kind = if all_elliptic {
        Kind::Elliptic
    } else if all_affine {
        Kind::Parabolic
    } else if comps.len() == 1 && indefinite && !broken_line && is_lanner(d, mask) {
        Kind::Lanner
    } else {
        Kind::Indefinite
    };
    SubdiagramClass {
        kind,
        components: names,
        rank,
        broken_line,
    }
}

/// A Lanner diagram is a connected indefinite diagram all of whose proper
/// subdiagrams are elliptic (the compact hyperbolic simplices, ranks 3-5).
fn is_lanner(d: &CoxeterDiagram, mask: u64) -> bool {
    let verts = subset_vertices(mask);
    if !(3..=5).contains(&verts.len()) {
        return false;
    }
    verts.iter().all(|&v| {
        let sub: Vec<usize> = verts.iter().copied().filter(|&u| u != v).collect();
        symmetric_definiteness(&raw_submatrix(d, &sub)) == Definiteness::PositiveDefinite
    })
}

// --- shape recognition ------------------------------------------------------

struct Shape {
    size: usize,
    /// Edge labels by local index pair.
    labels: Vec<Vec<Option<u32>>>,
    degrees: Vec<usize>,
    heavy: usize,
    fours: usize,
    sixes: usize,
    edge_count: usize,
}

impl Shape {
    fn new(d: &CoxeterDiagram, verts: &[usize]) -> Option<Shape> {
        let size = verts.len();
        let mut labels = vec![vec![None; size]; size];
        let mut degrees = vec![0usize; size];
        let (mut heavy, mut fours, mut sixes, mut edge_count) = (0, 0, 0, 0);
        for a in 0..size {
            for b in (a + 1)..size {
                match d.label(verts[a], verts[b]) {
                    None => {}
                    Some(EdgeLabel::Dashed) => return None,
                    Some(EdgeLabel::Heavy) => {
                        labels[a][b] = Some(u32::MAX);
                        labels[b][a] = Some(u32::MAX);
                        heavy += 1;
                        edge_count += 1;
                        degrees[a] += 1;
                        degrees[b] += 1;
                    }
                    Some(EdgeLabel::Finite(m)) => {
                        labels[a][b] = Some(m);
                        labels[b][a] = Some(m);
                        match m {
                            4 => fours += 1,
                            6 => sixes += 1,
                            _ => {}
                        }
                        edge_count += 1;
                        degrees[a] += 1;
                        degrees[b] += 1;
                    }
                }
            }
        }
        Some(Shape {
            size,
            labels,
            degrees,
            heavy,
            fours,
            sixes,
            edge_count,
        })
    }

    fn is_path(&self) -> bool {
        self.edge_count == self.size - 1 && self.degrees.iter().all(|&d| d <= 2)
    }

    fn is_cycle(&self) -> bool {
        self.size >= 3 && self.edge_count == self.size && self.degrees.iter().all(|&d| d == 2)
    }

    /// Endpoints-first traversal of a path; labels along the way.
    fn path_labels(&self) -> Vec<u32> {
        let start = (0..self.size).find(|&v| self.degrees[v] == 1).unwrap();
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < self.size {
            let next = (0..self.size)
                .find(|&u| u != prev && self.labels[cur][u].is_some())
                .unwrap();
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
            .windows(2)
            .map(|w| self.labels[w[0]][w[1]].unwrap())
            .collect()
    }

    /// For a tree with exactly one degree-3 vertex and all other degrees <= 2:
    /// sorted arm lengths.
    fn star_arms(&self) -> Option<Vec<usize>> {
        let centers: Vec<usize> = (0..self.size).filter(|&v| self.degrees[v] == 3).collect();
        if centers.len() != 1
            || self.degrees.iter().any(|&d| d > 3)
            || self.edge_count != self.size - 1
        {
            return None;
        }
        let c = centers[0];
        let mut arms = Vec::new();
        for first in (0..self.size).filter(|&u| self.labels[c][u].is_some()) {
            let mut len = 1;
            let mut prev = c;
            let mut cur = first;
            while let Some(next) =
                (0..self.size).find(|&u| u != prev && self.labels[cur][u].is_some())
            {
                len += 1;
                prev = cur;
                cur = next;
            }
            arms.push(len);
        }
        arms.sort_unstable();
        Some(arms)
    }
}

fn recognize_elliptic(d: &CoxeterDiagram, verts: &[usize]) -> Option<ComponentType> {
    let s = Shape::new(d, verts)?;
    let n = s.size;
    if s.heavy > 0 {
        return None;
    }
    if n == 1 {
        return Some(ComponentType::A(1));
    }
    if s.sixes == 1 && s.fours == 0 && n == 2 {
        return Some(ComponentType::G2);
    }
    if s.sixes > 0 {
        return None;
    }
    if s.fours == 0 {
        if s.is_path() {
            return Some(ComponentType::A(n));
        }
        if let Some(arms) = s.star_arms() {
            return match arms.as_slice() {
                [1, 1, _] => Some(ComponentType::D(n)),
                [1, 2, 2] => Some(ComponentType::E(6)),
                [1, 2, 3] => Some(ComponentType::E(7)),
                [1, 2, 4] => Some(ComponentType::E(8)),
                _ => None,
            };
        }
        return None;
    }
    if s.fours == 1 && s.is_path() {
        let labels = s.path_labels();
        if labels[0] == 4 || labels[n - 2] == 4 {
            return Some(ComponentType::B(n));
        }
        if n == 4 && labels[1] == 4 {
            return Some(ComponentType::F4);
        }
    }
    None
}

fn recognize_affine(d: &CoxeterDiagram, verts: &[usize]) -> Option<ComponentType> {
    let s = Shape::new(d, verts)?;
    let n = s.size;
    let rank = n - 1;
    if n == 2 && s.heavy == 1 {
        return Some(ComponentType::AffineA(1));
    }
    if s.heavy > 0 {
        return None;
    }
    if s.sixes == 1 {
        if n == 3 && s.is_path() {
            return Some(ComponentType::AffineG2); // path 6-3
        }
        return None;
    }
    if s.fours == 0 && s.sixes == 0 {
        if s.is_cycle() {
            return Some(ComponentType::AffineA(rank));
        }
        if let Some(arms) = s.star_arms() {
            return match arms.as_slice() {
                [2, 2, 2] => Some(ComponentType::AffineE(6)),
                [1, 3, 3] => Some(ComponentType::AffineE(7)),
                [1, 2, 5] => Some(ComponentType::AffineE(8)),
                _ => None,
            };
        }
        // Two degree-3 vertices: affine D.
        let deg3 = s.degrees.iter().filter(|&&d| d == 3).count();
        if deg3 == 2 && s.edge_count == n - 1 && s.degrees.iter().all(|&d| d <= 3) {
            return Some(ComponentType::AffineD(rank));
        }
        return None;
    }
    if s.fours == 2 && s.is_path() {
        let labels = s.path_labels();
        if labels[0] == 4 && labels[n - 2] == 4 {
            return Some(ComponentType::AffineC(rank));
        }
        return None;
    }
    if s.fours == 1 {
        if s.is_path() {
            let labels = s.path_labels();
            if n == 5 && labels[1] == 4 {
                return Some(ComponentType::AffineF4);
            }
            return None;
        }
        // Fork at one end, label-4 edge at the other: affine B.
        if let Some(arms) = s.star_arms() {
            if arms[0] == 1 && arms[1] == 1 {
                return Some(ComponentType::AffineB(rank));
            }
        }
        return None;
    }
    None
}

// --- enumeration ------------------------------------------------------------

/// Incremental exact LDL factorization of a growing principal submatrix of
/// the raw Gram matrix. While all pivots are positive the set is positive
/// definite; a zero pivot on top of a positive-definite prefix means the set
/// is semidefinite of corank 1; a negative pivot means indefinite.
struct LdlStack<'a> {
    d: &'a CoxeterDiagram,
    verts: Vec<usize>,
    // l[i][j] for j < i, plus pivots.
    l: Vec<Vec<Qq>>,
    pivots: Vec<Qq>,
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Pivot {
    Positive,
    Zero,
    Negative,
}

impl<'a> LdlStack<'a> {
    fn new(d: &'a CoxeterDiagram) -> Self {
        LdlStack {
            d,
            verts: Vec::new(),
            l: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Extend the factorization by vertex v. On Positive the vertex stays
    /// pushed; otherwise the stack is unchanged.
    fn push(&mut self, v: usize) -> Pivot {
        use num_traits::Zero;
        let k = self.verts.len();
        let mut row: Vec<Qq> = Vec::with_capacity(k);
        for j in 0..k {
            let mut x = qq(self.d.gram().raw(v, self.verts[j]));
            for t in 0..j {
                let s = row[t].clone() * self.l[j][t].clone() * self.pivots[t].clone();
                x -= s;
            }
            row.push(x / self.pivots[j].clone());
        }
        let mut pivot = qq(self.d.gram().raw(v, v));
        for (t, r) in row.iter().enumerate() {
            pivot -= r.clone() * r.clone() * self.pivots[t].clone();
        }
        if pivot < Qq::zero() {
            return Pivot::Negative;
        }
        if pivot.is_zero() {
            return Pivot::Zero;
        }
        self.verts.push(v);
        self.l.push(row);
        self.pivots.push(pivot);
        Pivot::Positive
    }

    fn pop(&mut self) {
        self.verts.pop();
        self.l.pop();
        self.pivots.pop();
    }
}

/// Elliptic subsets of the diagram, as bitmasks.
pub struct EllipticSets {
    pub all: HashSet<u64>,
}

impl EllipticSets {
    pub fn of_size(&self, k: usize) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .all
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == k)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.all.contains(&mask)
    }
}

struct EllipticDfs<'a> {
    ldl: LdlStack<'a>,
    n: usize,
    cap: usize,
    count: usize,
    /// Only record subsets of at least this size; prune branches that cannot
    /// reach it.
    min_size: usize,
    all: HashSet<u64>,
}

impl EllipticDfs<'_> {
    /// Extending elliptic subsets one vertex at a time visits each once:
    /// subsets of elliptic sets are elliptic, so the space is downward
    /// closed.
    fn go(&mut self, mask: u64, size: usize, min_next: usize) -> Result<(), EnumerationBudgetExceeded> {
        for v in min_next..self.n {
            // Even taking every remaining vertex cannot reach min_size.
            if size + self.n - v < self.min_size {
                break;
            }
            if self.ldl.push(v) == Pivot::Positive {
                let m = mask | (1 << v);
                self.count += 1;
                if self.count > self.cap {
                    return Err(EnumerationBudgetExceeded { cap: self.cap });
                }
                if size + 1 >= self.min_size {
                    self.all.insert(m);
                }
                self.go(m, size + 1, v + 1)?;
                self.ldl.pop();
            }
        }
        Ok(())
    }
}

/// All elliptic subsets of the diagram.
pub fn elliptic_sets(
    d: &CoxeterDiagram,
    cap: usize,
) -> Result<EllipticSets, EnumerationBudgetExceeded> {
    elliptic_sets_at_least(d, 0, cap)
}

/// All elliptic subsets with at least `min_size` vertices. The search prunes
/// branches that cannot reach the threshold, which keeps it tractable on
/// diagrams whose largest elliptic subsets are far smaller than the diagram.
pub fn elliptic_sets_at_least(
    d: &CoxeterDiagram,
    min_size: usize,
    cap: usize,
) -> Result<EllipticSets, EnumerationBudgetExceeded> {
    let mut dfs = EllipticDfs {
        ldl: LdlStack::new(d),
        n: d.size(),
        cap,
        count: 0,
        min_size,
        all: HashSet::new(),
    };
    dfs.go(0, 0, 0)?;
    Ok(EllipticSets { all: dfs.all })
}

/// Minimal non-elliptic subsets; each is connected (a critical matrix is
/// irreducible).
pub fn critical_subdiagrams(
    d: &CoxeterDiagram,
    cap: usize,
) -> Result<Vec<u64>, EnumerationBudgetExceeded> {
    let ell = elliptic_sets(d, cap)?;
    let n = d.size();
    let mut out = HashSet::new();
    // Singleton criticality cannot occur (norms are positive), so critical
    // sets are elliptic sets plus one vertex.
    for &e in &ell.all {
        for v in 0..n {
            let bit = 1u64 << v;
            if e & bit != 0 {
                continue;
            }
            let cand = e | bit;
            if ell.contains(cand) {
                continue;
            }
            let all_proper_elliptic = (0..n)
                .filter(|&u| cand & (1 << u) != 0)
                .all(|u| cand == 1 << u || ell.contains(cand & !(1 << u)));
            if all_proper_elliptic {
                out.insert(cand);
            }
        }
    }
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// Irreducible affine subdiagrams: connected subsets whose Gram block is
/// singular positive semidefinite. Enumerated by growing connected subsets;
/// every proper connected subset of an irreducible affine diagram is
/// elliptic, a superset of an affine or indefinite set is never elliptic or
/// irreducible affine, so branches stop at the first non-positive pivot.
pub fn affine_components(
    d: &CoxeterDiagram,
    cap: usize,
) -> Result<Vec<u64>, EnumerationBudgetExceeded> {
    struct Conn<'a> {
        ldl: LdlStack<'a>,
        cap: usize,
        count: usize,
        out: HashSet<u64>,
    }
    impl Conn<'_> {
        /// Standard connected-induced-subgraph enumeration: extend by one
        /// frontier vertex at a time, banning each explored choice from the
        /// later branches of the same level so every set appears once.
        fn go(
            &mut self,
            mask: u64,
            allowed: u64,
            banned: u64,
        ) -> Result<(), EnumerationBudgetExceeded> {
            let ext = self.ldl.d.boundary(mask) & allowed & !banned;
            let mut later_ban = banned;
            let mut bits = ext;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.count += 1;
                if self.count > self.cap {
                    return Err(EnumerationBudgetExceeded { cap: self.cap });
                }
                match self.ldl.push(v) {
                    Pivot::Positive => {
                        self.go(mask | (1 << v), allowed, later_ban)?;
                        self.ldl.pop();
                    }
                    // Connected + semidefinite singular on top of a definite
                    // prefix = irreducible affine.
                    Pivot::Zero => {
                        self.out.insert(mask | (1 << v));
                    }
                    Pivot::Negative => {}
                }
                later_ban |= 1 << v;
            }
            Ok(())
        }
    }
    let n = d.size();
    let mut conn = Conn {
        ldl: LdlStack::new(d),
        cap,
        count: 0,
        out: HashSet::new(),
    };
    for s in 0..n {
        // Sets whose smallest vertex is s.
        let allowed = if n == 64 { !0u64 } else { (1u64 << n) - 1 } & !((1u64 << s) - 1) & !(1 << s);
        assert!(conn.ldl.push(s) == Pivot::Positive);
        conn.go(1 << s, allowed, 0)?;
        conn.ldl.pop();
    }
    let mut v: Vec<u64> = conn.out.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

/// All parabolic subdiagrams of the given rank: unions of pairwise disjoint,
/// pairwise unjoined irreducible affine components.
pub fn parabolic_subdiagrams_of_rank(
    d: &CoxeterDiagram,
    rank: usize,
    cap: usize,
) -> Result<Vec<u64>, EnumerationBudgetExceeded> {
    let comps = affine_components(d, cap)?;
    let with_rank: Vec<(u64, usize, u64)> = comps
        .iter()
        .map(|&m| (m, m.count_ones() as usize - 1, m | d.boundary(m)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        items: &[(u64, usize, u64)],
        idx: usize,
        used: u64,
        blocked: u64,
        acc_rank: usize,
        target: usize,
        out: &mut Vec<u64>,
    ) {
        if acc_rank == target && used != 0 {
            out.push(used);
            // Larger unions of the same rank are impossible (adding a
            // component adds rank), so no need to return here for dedup;
            // continue searching other branches from the caller.
            return;
        }
        if idx == items.len() || acc_rank >= target {
            return;
        }
        // Take items[idx] if compatible.
        let (m, r, footprint) = items[idx];
        if m & blocked == 0 && acc_rank + r <= target {
            rec(items, idx + 1, used | m, blocked | footprint, acc_rank + r, target, out);
        }
        rec(items, idx + 1, used, blocked, acc_rank, target, out);
    }
    rec(&with_rank, 0, 0, 0, 0, rank, &mut out);
    let mut set: Vec<u64> = out
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    set.sort_unstable();
    Ok(set)
}

/// All vertex subsets whose classification matches (kind, rank).
///
/// Elliptic and Parabolic are enumerated directly; the other kinds fall back
/// to filtering critical sets (Lanner) which is what downstream callers need.
pub fn enumerate_subdiagrams(
    d: &CoxeterDiagram,
    kind: Kind,
    rank: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>, EnumerationBudgetExceeded> {
    let masks: Vec<u64> = match kind {
        Kind::Elliptic => elliptic_sets(d, cap)?.of_size(rank),
        Kind::Parabolic => parabolic_subdiagrams_of_rank(d, rank, cap)?,
        Kind::Lanner => critical_subdiagrams(d, cap)?
            .into_iter()
            .filter(|&m| {
                let c = classify_mask(d, m);
                c.kind == Kind::Lanner && c.rank == rank
            })
            .collect(),
        Kind::Indefinite => critical_subdiagrams(d, cap)?
            .into_iter()
            .filter(|&m| {
                let c = classify_mask(d, m);
                c.kind == Kind::Indefinite && c.rank == rank
            })
            .collect(),
    };
    Ok(masks.into_iter().map(|m| subset_vertices(m)).collect())
}

pub fn vertices_of_mask(mask: u64) -> Vec<usize> {
    subset_vertices(mask)
}
