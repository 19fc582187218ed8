//! Certified non-reflectivity for n >= 14.
//!
//! After the first four accepted roots the diagram contains a parabolic
//! subdiagram of two unjoined affine E6 components (rank 12). A finite-volume
//! polyhedron would require extending it to a parabolic subdiagram of rank
//! n - 1, and any wall participating in the extension must be orthogonal to
//! all 14 walls of that subdiagram. The orthogonality system pins the wall to
//! the form p*Ep + q*Eq + tail, where the tail is supported on the last
//! n - 14 coordinates and the head has squared length 3(p - 2q)^2. The norm
//! and crystallographic constraints then force p = 2q, so every such wall
//! looks, metrically, like its tail: a vector in the positive definite
//! lattice Z^(n-14). A parabolic extension would need rank n - 13 from a
//! space of dimension n - 14, which is impossible. Each step of this argument
//! is re-verified numerically here.

use crate::classify::{
    affine_components, classify_mask, mask_of, vertices_of_mask, ComponentType, Kind,
};
use crate::diagram::{diagram, CoxeterDiagram};
use crate::engine::{run_to_budget, Budget};
use crate::error::{CertifyError, EngineError};
use crate::gram::gram;
use crate::lattice::{QuadraticForm, Root};
use crate::linalg::{nullspace, qq, rank, Qq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// No wall orthogonal to the obstruction exists at all.
    N14,
    /// The cheapest completing wall has norm 1 and forms an affine A1.
    N15,
    /// The cheapest completing wall has norm 2 and forms an affine C2.
    N16,
    /// The cheapest completing wall has norm 2 and forms an affine B(n-14).
    NGe17,
}

#[derive(Debug, Clone)]
pub struct ObstructionCertificate {
    pub n: usize,
    pub case: CaseTag,
    /// All walls of the budgeted run: the polyhedral angle plus four roots.
    pub roots: Vec<Root>,
    /// Wall indices of the obstructing parabolic subdiagram.
    pub parabolic: Vec<usize>,
    /// Its two affine E6 components.
    pub components: [Vec<usize>; 2],
    /// Rank of the obstruction (12) and the rank a cusp would demand (n - 1).
    pub rank: usize,
    pub required_rank: usize,
    /// Generators of the orthogonal complement beyond the tail coordinates.
    pub span_generators: [Vec<i64>; 2],
    /// Inner products of the generators: [[3, -6], [-6, 12]].
    pub restricted_gram: [[i64; 2]; 2],
    /// The isotropic direction 2*Ep + Eq of the complement.
    pub isotropic: Vec<i64>,
    /// Dimension of the tail space (n - 14) versus the extension rank the
    /// polyhedron would need (n - 13).
    pub tail_dim: usize,
    pub needed_extension_rank: usize,
    /// The cheapest wall orthogonal to the obstruction (n >= 15).
    pub witness: Option<Root>,
}

fn fail(step: &str, detail: impl Into<String>) -> CertifyError {
    CertifyError::CertificationFailed {
        step: step.to_string(),
        detail: detail.into(),
    }
}

/// The four roots accepted first in every dimension n >= 14.
fn expected_roots(form: &QuadraticForm) -> Vec<Vec<i64>> {
    let dim = form.dim();
    let pad = |head: Vec<i64>| {
        let mut v = head;
        v.resize(dim, 0);
        v
    };
    vec![
        pad(vec![1, 3]),
        pad(vec![1, 1, 1, 1, 1, 1]),
        pad({
            let mut v = vec![2, 2];
            v.extend(vec![1; 10]);
            v
        }),
        pad({
            let mut v = vec![2];
            v.extend(vec![1; 14]);
            v
        }),
    ]
}

/// Vectors spanning the orthogonal complement of the obstruction, besides the
/// unit tail vectors: p = 1, q = 0 and p = 0, q = 1 in
/// (2q + p, 3q, 3q, p x 6, q x 6, 0, ...).
fn span_generators(form: &QuadraticForm) -> [Vec<i64>; 2] {
    let dim = form.dim();
    let mut ep = vec![0i64; dim];
    ep[0] = 1;
    for i in 3..=8 {
        ep[i] = 1;
    }
    let mut eq = vec![0i64; dim];
    eq[0] = 2;
    eq[1] = 3;
    eq[2] = 3;
    for i in 9..=14 {
        eq[i] = 1;
    }
    [ep, eq]
}

/// The highest rank achieved by any parabolic subdiagram, with a witness.
pub fn max_parabolic(
    d: &CoxeterDiagram,
    cap: usize,
) -> Result<Option<(usize, Vec<usize>)>, EngineError> {
    let comps = affine_components(d, cap)?;
    // Exhaustive packing of disjoint, unjoined affine components.
    let items: Vec<(u64, usize, u64)> = comps
        .iter()
        .map(|&m| (m, m.count_ones() as usize - 1, m | d.boundary(m)))
        .collect();
    fn rec(items: &[(u64, usize, u64)], idx: usize, used: u64, blocked: u64, r: usize) -> (usize, u64) {
        if idx == items.len() {
            return (r, used);
        }
        let mut best = rec(items, idx + 1, used, blocked, r);
        let (m, cr, footprint) = items[idx];
        if m & blocked == 0 {
            let take = rec(items, idx + 1, used | m, blocked | footprint, r + cr);
            if take.0 > best.0 {
                best = take;
            }
        }
        best
    }
    let (r, mask) = rec(&items, 0, 0, 0, 0);
    Ok(if r == 0 {
        None
    } else {
        Some((r, vertices_of_mask(mask)))
    })
}

/// Certify that the form -3x0^2 + x1^2 + ... + xn^2 is not reflective.
pub fn certify_nonreflective(form: &QuadraticForm) -> Result<ObstructionCertificate, CertifyError> {
    let n = form.n();
    if form.phi() != 3 {
        return Err(CertifyError::WrongForm(form.phi()));
    }
    if n < 14 {
        return Err(CertifyError::DimensionTooSmall(n));
    }
    if n + 4 > 60 {
        return Err(fail("setup", format!("dimension {n} exceeds the 60-wall diagram limit")));
    }

    // Step 1: run the construction up to the first four accepted roots.
    let budget = Budget {
        max_roots: n + 4,
        max_k0: 100,
        enum_cap: 10_000_000,
    };
    let (roots, _steps) = run_to_budget(form, &budget).map_err(CertifyError::Engine)?;
    let accepted: Vec<Vec<i64>> = roots[n..].iter().map(|r| r.coords().to_vec()).collect();
    if accepted != expected_roots(form) {
        return Err(fail("run", format!("unexpected accepted roots: {accepted:?}")));
    }

    // Step 2: verify the two unjoined affine E6 components.
    let d = diagram(&gram(form, &roots)).map_err(EngineError::from)?;
    // Wall indices: e_i sits at index i - 1; root n + j at index n + j - 1.
    let expect_a = mask_of(&[0, 8, 9, 10, 11, 12, n + 2]);
    let expect_b = mask_of(&[2, 3, 4, 5, 6, n + 1, n + 3]);
    for mask in [expect_a, expect_b] {
        let c = classify_mask(&d, mask);
        if c.components != vec![(ComponentType::AffineE(6), 6)] {
            return Err(fail(
                "locate-obstruction",
                format!("expected an affine E6 component, got {:?}", c.components),
            ));
        }
    }
    if expect_a & expect_b != 0 || d.boundary(expect_a) & expect_b != 0 {
        return Err(fail("locate-obstruction", "the two components are joined"));
    }
    let parabolic_mask = expect_a | expect_b;
    let cls = classify_mask(&d, parabolic_mask);
    if cls.kind != Kind::Parabolic || cls.rank != 12 {
        return Err(fail(
            "locate-obstruction",
            format!("expected parabolic rank 12, got {:?} rank {}", cls.kind, cls.rank),
        ));
    }

    // Step 3: solve the orthogonality system against the 14 obstruction walls.
    let eta = |j: usize| if j == 0 { -3i64 } else { 1 };
    let walls: Vec<&Root> = vertices_of_mask(parabolic_mask)
        .into_iter()
        .map(|i| &roots[i])
        .collect();
    let system: Vec<Vec<Qq>> = walls
        .iter()
        .map(|w| (0..form.dim()).map(|j| qq(eta(j) * w.coords()[j])).collect())
        .collect();
    // The 14 walls span only 13 dimensions: the two affine components share
    // their isotropic radical direction, so the solution space has dimension
    // (n + 1) - 13 = n - 12.
    let ns = nullspace(&system);
    if ns.len() != n - 12 {
        return Err(fail(
            "orthogonality",
            format!("solution space has dimension {}, expected {}", ns.len(), n - 12),
        ));
    }
    let gens = span_generators(form);
    let ortho = |v: &[i64]| {
        walls
            .iter()
            .all(|w| form.inner_product(v, w.coords()) == Ok(0))
    };
    for g in &gens {
        if !ortho(g) {
            return Err(fail("orthogonality", "generator not orthogonal to the obstruction"));
        }
    }
    // Generators plus unit tail vectors must span the whole solution space.
    let mut span: Vec<Vec<Qq>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| qq(x)).collect())
        .collect();
    for i in 15..=n {
        let mut unit = vec![Qq::from_integer(0); form.dim()];
        unit[i] = Qq::from_integer(1);
        if !ortho(&{
            let mut u = vec![0i64; form.dim()];
            u[i] = 1;
            u
        }) {
            return Err(fail("orthogonality", "tail vector not orthogonal"));
        }
        span.push(unit);
    }
    if rank(&span) != n - 12 {
        return Err(fail("orthogonality", "generators do not span the solution space"));
    }

    // Step 4: the head metric. Gram of (Ep, Eq) is [[3, -6], [-6, 12]], so a
    // head p*Ep + q*Eq has squared length 3(p - 2q)^2, and 2*Ep + Eq is the
    // isotropic direction.
    let ip = |x: &[i64], y: &[i64]| form.inner_product(x, y).unwrap();
    let restricted = [
        [ip(&gens[0], &gens[0]), ip(&gens[0], &gens[1])],
        [ip(&gens[1], &gens[0]), ip(&gens[1], &gens[1])],
    ];
    if restricted != [[3, -6], [-6, 12]] {
        return Err(fail("head-metric", format!("restricted Gram is {restricted:?}")));
    }
    let isotropic: Vec<i64> = gens[0]
        .iter()
        .zip(&gens[1])
        .map(|(&p, &q)| 2 * p + q)
        .collect();
    if ip(&isotropic, &isotropic) != 0
        || ip(&isotropic, &gens[0]) != 0
        || ip(&isotropic, &gens[1]) != 0
    {
        return Err(fail("head-metric", "2*Ep + Eq is not the radical direction"));
    }

    // Step 5: norm analysis. A wall orthogonal to the obstruction has squared
    // length 3s^2 + (tail)^2 with s = p - 2q, and the norm must divide 2*phi.
    for d_norm in form.admissible_norms() {
        if d_norm % 3 == 0 {
            // Norm 3 or 6 forces 3 | k_j for every j, hence 3 | p, 3 | q, and
            // the squared length is divisible by 9.
            if d_norm % 9 == 0 {
                return Err(fail("norms", format!("norm {d_norm} evades the divisibility bound")));
            }
        } else if 3 > d_norm {
            // Norm 1 or 2 forces s = 0: the head is isotropic.
        } else {
            return Err(fail("norms", format!("norm {d_norm} admits a nonzero head")));
        }
    }

    // Step 6: the rank bound. With s = 0 every orthogonal wall is metrically
    // its tail, a vector in Z^(n - 14); the obstruction would need extension
    // components of total rank n - 13 from that space.
    let tail_dim = n - 14;
    let needed = n - 13;
    if needed <= tail_dim {
        return Err(fail("rank-bound", "tail space too large to exclude an extension"));
    }

    // Step 7 (n >= 15): exhibit the cheapest orthogonal wall and check that it
    // closes an affine chain with the tail walls, of insufficient rank.
    let (case, witness) = match n {
        14 => (CaseTag::N14, None),
        _ => {
            let mut w = isotropic.clone();
            w[15] = 1;
            if n >= 16 {
                w[16] = 1;
            }
            let root = Root::new(form, w).map_err(|e| fail("witness", e.to_string()))?;
            if !ortho(root.coords()) {
                return Err(fail("witness", "witness wall not orthogonal to the obstruction"));
            }
            // Tail walls e15 .. en sit at indices 14 .. n - 1.
            let mut chain: Vec<Root> = roots[14..n].to_vec();
            chain.push(root.clone());
            let cd = diagram(&gram(form, &chain)).map_err(EngineError::from)?;
            let all: Vec<usize> = (0..chain.len()).collect();
            let ccls = classify_mask(&cd, mask_of(&all));
            let expect = match n {
                15 => vec![(ComponentType::AffineA(1), 1)],
                16 => vec![(ComponentType::AffineC(2), 2)],
                _ => vec![(ComponentType::AffineB(n - 14), n - 14)],
            };
            if ccls.kind != Kind::Parabolic || ccls.components != expect {
                return Err(fail(
                    "witness",
                    format!("witness chain is {:?} {:?}", ccls.kind, ccls.components),
                ));
            }
            // Even with the witness the parabolic rank is 12 + (n - 14) = n - 2.
            if 12 + ccls.rank != n - 2 {
                return Err(fail("witness", "witness chain has unexpected rank"));
            }
            let case = match n {
                15 => CaseTag::N15,
                16 => CaseTag::N16,
                _ => CaseTag::NGe17,
            };
            (case, Some(root))
        }
    };

    Ok(ObstructionCertificate {
        n,
        case,
        roots,
        parabolic: vertices_of_mask(parabolic_mask),
        components: [vertices_of_mask(expect_a), vertices_of_mask(expect_b)],
        rank: 12,
        required_rank: n - 1,
        span_generators: gens,
        restricted_gram: restricted,
        isotropic,
        tail_dim,
        needed_extension_rank: needed,
        witness,
    })
}
