//! The wall-by-wall construction: starting from the walls of the fundamental
//! cone at the distinguished point, accept roots in order of increasing
//! distance until the accumulated polyhedron has finite volume or a budget
//! runs out.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::diophantine::solve_diophantine;
use crate::error::EngineError;
use crate::lattice::{QuadraticForm, Rat, Root};
use crate::volume::{analyze, VolumeReport};

/// Resource limits for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Stop once this many roots (including the initial walls) are accepted.
    pub max_roots: usize,
    /// Largest time-like coefficient k0 to enumerate.
    pub max_k0: i64,
    /// Cap on subdiagram enumeration during volume checks.
    pub enum_cap: usize,
}

impl Budget {
    pub fn for_dimension(n: usize) -> Budget {
        Budget {
            max_roots: 4 * n,
            max_k0: 10_000,
            enum_cap: 10_000_000,
        }
    }
}

/// Walls of the fundamental cone for the stabilizer of v0: the simple roots
/// -vi + v(i+1) for 1 <= i < n together with -vn. Norms (2, ..., 2, 1).
pub fn initial_roots(form: &QuadraticForm) -> Vec<Root> {
    let n = form.n();
    let mut out = Vec::with_capacity(n);
    for i in 1..n {
        let mut c = vec![0i64; form.dim()];
        c[i] = -1;
        c[i + 1] = 1;
        out.push(Root::new(form, c).expect("initial root is valid"));
    }
    let mut c = vec![0i64; form.dim()];
    c[n] = -1;
    out.push(Root::new(form, c).expect("initial root is valid"));
    out
}

/// A root lies on the correct side of every accepted wall.
pub fn is_admissible(form: &QuadraticForm, root: &Root, accepted: &[Root]) -> bool {
    accepted
        .iter()
        .all(|r| form.inner_product(root.coords(), r.coords()).unwrap_or(1) <= 0)
}

/// One (k0, d) cell of the distance ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cell {
    priority: Rat,
    d: i64,
    k0: i64,
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap pops the maximum; rank cells so the maximum is the one
        // with the smallest priority, ties broken by larger norm d.
        other
            .priority
            .cmp(&self.priority)
            .then(self.d.cmp(&other.d))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lazy stream of (k0, d) cells grouped into equal-priority classes, in
/// nondecreasing priority order. Within a class, cells come with d descending.
pub struct PriorityCells {
    heap: BinaryHeap<Cell>,
    max_k0: i64,
}

impl PriorityCells {
    pub fn new(form: &QuadraticForm, max_k0: i64) -> PriorityCells {
        let mut heap = BinaryHeap::new();
        if max_k0 >= 1 {
            for d in form.admissible_norms() {
                heap.push(Cell {
                    priority: Rat::new(1, d),
                    d,
                    k0: 1,
                });
            }
        }
        PriorityCells { heap, max_k0 }
    }

    /// The next equal-priority class: (priority, cells as (k0, d) pairs).
    pub fn next_class(&mut self) -> Option<(Rat, Vec<(i64, i64)>)> {
        let first = self.heap.pop()?;
        let priority = first.priority;
        let mut cells = vec![first];
        while let Some(c) = self.heap.peek() {
            if c.priority != priority {
                break;
            }
            cells.push(self.heap.pop().unwrap());
        }
        for c in &cells {
            if c.k0 < self.max_k0 {
                let k0 = c.k0 + 1;
                self.heap.push(Cell {
                    priority: Rat::new(k0 * k0, c.d),
                    d: c.d,
                    k0,
                });
            }
        }
        Some((priority, cells.into_iter().map(|c| (c.k0, c.d)).collect()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The accepted walls bound a finite-volume polyhedron.
    FiniteVolume,
    /// A budget ran out before the polyhedron closed up.
    BudgetExhausted,
}

/// One accepted priority class.
#[derive(Debug, Clone)]
pub struct StepLog {
    pub priority: Rat,
    /// Solutions examined across the class's cells.
    pub candidates: usize,
    pub accepted: Vec<Root>,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub form: QuadraticForm,
    pub roots: Vec<Root>,
    pub initial_count: usize,
    pub verdict: Verdict,
    pub steps: Vec<StepLog>,
    pub volume: VolumeReport,
}

/// Accept roots class by class; `stop` inspects the walls after each class
/// that accepted something and ends the run early by returning true.
fn accept_classes(
    form: &QuadraticForm,
    budget: &Budget,
    mut stop: impl FnMut(&[Root]) -> Result<bool, EngineError>,
) -> Result<(Vec<Root>, Vec<StepLog>, bool), EngineError> {
    if budget.max_roots < form.n() || budget.max_k0 < 1 {
        return Err(EngineError::BadBudget {
            max_roots: budget.max_roots,
            n: form.n(),
        });
    }
    let mut roots = initial_roots(form);
    let mut cells = PriorityCells::new(form, budget.max_k0);
    let mut steps = Vec::new();
    while let Some((priority, class)) = cells.next_class() {
        let mut accepted_here = Vec::new();
        let mut candidates = 0usize;
        for (k0, d) in class {
            // Solutions arrive lexicographically descending; combined with
            // the d-descending cell order this fixes the acceptance order
            // inside the class.
            for root in solve_diophantine(form, k0, d, &roots) {
                candidates += 1;
                if is_admissible(form, &root, &roots) {
                    roots.push(root.clone());
                    accepted_here.push(root);
                }
            }
        }
        if accepted_here.is_empty() {
            continue;
        }
        steps.push(StepLog {
            priority,
            candidates,
            accepted: accepted_here,
        });
        if stop(&roots)? {
            return Ok((roots, steps, true));
        }
        if roots.len() >= budget.max_roots {
            break;
        }
    }
    Ok((roots, steps, false))
}

/// Accept roots until the budget runs out, with no volume checks.
pub fn run_to_budget(
    form: &QuadraticForm,
    budget: &Budget,
) -> Result<(Vec<Root>, Vec<StepLog>), EngineError> {
    let (roots, steps, _) = accept_classes(form, budget, |_| Ok(false))?;
    Ok((roots, steps))
}

/// Run the construction until the polyhedron has finite volume or a budget
/// is exhausted.
pub fn run(form: &QuadraticForm, budget: &Budget) -> Result<RunReport, EngineError> {
    let mut volume: Option<VolumeReport> = None;
    let (roots, steps, stopped) = accept_classes(form, budget, |roots| {
        if roots.len() < form.n() + 1 {
            return Ok(false);
        }
        let vol = analyze(form, roots, budget.enum_cap)?;
        let finite = vol.finite;
        volume = Some(vol);
        Ok(finite)
    })?;
    let verdict = if stopped {
        Verdict::FiniteVolume
    } else {
        Verdict::BudgetExhausted
    };
    let volume = match volume {
        Some(v) if verdict == Verdict::FiniteVolume => v,
        _ => analyze(form, &roots, budget.enum_cap)?,
    };
    Ok(RunReport {
        form: *form,
        roots,
        initial_count: form.n(),
        verdict,
        steps,
        volume,
    })
}
