//! Antichains in completely branching sets: the randomized round-by-round
//! procedure and its certificate-advised deterministic variant.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{sort_by_phi, BranchingSet, Schedule, Str};

/// Round `k` of the procedure: the chosen elements so far determine the
/// restricted set `S_k = {τ ∈ S : σ_j ⊥ τ, |τ| > |σ_j| for all j < k}`.
#[derive(Clone, Debug)]
pub struct SolverState<'a> {
    set: &'a BranchingSet,
    schedule: Schedule,
    chosen: Vec<Str>,
}

impl<'a> SolverState<'a> {
    pub fn new(set: &'a BranchingSet, schedule: Schedule) -> Self {
        SolverState {
            set,
            schedule,
            chosen: Vec::new(),
        }
    }

    pub fn round(&self) -> usize {
        self.chosen.len()
    }

    pub fn chosen(&self) -> &[Str] {
        &self.chosen
    }

    /// Required antichain size in the current round.
    pub fn required_size(&self) -> usize {
        self.schedule.size(self.round())
    }

    /// `τ ∈ S_k`.
    pub fn admits(&self, tau: &Str) -> bool {
        self.set.contains(tau) && self.chosen.iter().all(|s| s.incomparable(tau) && tau.len() > s.len())
    }

    /// Members of `S_k` in stream order.
    pub fn stream(&self) -> impl Iterator<Item = &'a Str> + '_ {
        self.set.members().iter().filter(|t| self.admits(t))
    }

    pub fn choose(&mut self, sigma: Str) {
        self.chosen.push(sigma);
    }

    /// `S_k` is infinite according to the certificate.
    pub fn restricted_infinite(&self) -> Result<bool> {
        let cert = self
            .set
            .try_certificate()
            .ok_or_else(|| Error::NoCertificate("branching set has no certificate".into()))?;
        Ok(cert.infinite_avoiding(&self.chosen))
    }
}

/// Upper bound `C(2n−2, n−1)` on the diagonal Ramsey number `R(n, n)`.
pub fn ramsey_bound(n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    let mut c: u128 = 1;
    for i in 0..(n - 1) as u128 {
        c = c * (n as u128 - 1 + i + 1) / (i + 1);
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

/// Reads `stream` until it contains a chain or an antichain of size `n`. A chain
/// `q₀ ≺ … ≺ q_{n−1}` is turned into the antichain of its last-bit flips, which
/// lie in `set` because it is completely branching. At most `budget` elements
/// are read (default: the Ramsey bound).
pub fn find_antichain_of_size<'s>(
    set: &BranchingSet,
    stream: impl IntoIterator<Item = &'s Str>,
    n: usize,
    budget: Option<usize>,
) -> Result<Vec<Str>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let budget = budget.unwrap_or_else(|| ramsey_bound(n));
    // trie over the elements read so far; `elem[v]` is the element ending at v
    let mut kids: HashMap<(usize, u64), usize> = HashMap::new();
    let mut elem: Vec<Option<(&Str, usize)>> = vec![None];
    let mut fanout: Vec<usize> = vec![0];
    let mut maximal: HashSet<usize> = HashSet::new();
    let mut read = 0;
    for e in stream.into_iter().take(budget) {
        let mut node = 0;
        let mut path = Vec::with_capacity(e.len());
        for &x in e.items() {
            let parent = node;
            node = *kids.entry((parent, x)).or_insert_with(|| {
                elem.push(None);
                fanout.push(0);
                fanout[parent] += 1;
                elem.len() - 1
            });
            path.push(node);
        }
        if elem[node].is_some() {
            continue;
        }
        read += 1;
        let below = path[..path.len().saturating_sub(1)]
            .iter()
            .filter_map(|&v| elem[v].map(|(_, h)| (v, h)));
        let mut h = 1;
        for (v, hv) in below {
            maximal.remove(&v);
            h = h.max(hv + 1);
        }
        if fanout[node] == 0 {
            maximal.insert(node);
        }
        elem[node] = Some((e, h));
        if h >= n {
            let chain: Vec<&Str> = std::iter::once(0)
                .chain(path)
                .filter_map(|v| elem[v].map(|(s, _)| s))
                .collect();
            let flips = chain[chain.len() - n..]
                .iter()
                .map(|q| {
                    q.flip_last()
                        .filter(|f| set.contains(f))
                        .ok_or_else(|| Error::NotCompletelyBranching((*q).clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(flips);
        }
        if maximal.len() >= n {
            let mut out: Vec<Str> = maximal
                .iter()
                .map(|&v| elem[v].expect("maximal nodes are elements").0.clone())
                .collect();
            sort_by_phi(&mut out);
            out.truncate(n);
            return Ok(out);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no chain or antichain of size {n} among {read} elements"
    )))
}

/// Members `σ ∈ a` whose restricted set `{τ : σ_j ⊥ τ, σ ⊥ τ}` is finite.
pub fn bad_elements(set: &BranchingSet, chosen: &[Str], a: &[Str]) -> Result<Vec<Str>> {
    let cert = set
        .try_certificate()
        .ok_or_else(|| Error::NoCertificate("branching set has no certificate".into()))?;
    let mut avoid = chosen.to_vec();
    let mut out = Vec::new();
    for sigma in a {
        avoid.push(sigma.clone());
        if !cert.infinite_avoiding(&avoid) {
            out.push(sigma.clone());
        }
        avoid.pop();
    }
    Ok(out)
}

/// The bad element of `a`, if any; there is at most one when `S_k` is infinite.
pub fn bad_element(set: &BranchingSet, chosen: &[Str], a: &[Str]) -> Result<Option<Str>> {
    Ok(bad_elements(set, chosen, a)?.into_iter().next())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FailReason {
    /// The stream ran out while the restricted set is still infinite.
    SearchTimeout,
    /// An earlier choice left only finitely many candidates.
    BadChoiceCollapse,
}

impl FailReason {
    pub fn code(&self) -> &'static str {
        match self {
            FailReason::SearchTimeout => "SEARCH_TIMEOUT",
            FailReason::BadChoiceCollapse => "BAD_CHOICE_COLLAPSE",
        }
    }
}

/// One line of the solver trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub k: usize,
    pub a_size: usize,
    pub chosen: Option<Str>,
    pub bad_present: Option<bool>,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SolverOutcome {
    Success {
        antichain: Vec<Str>,
        trace: Vec<RoundRecord>,
    },
    Fail {
        reason: FailReason,
        round: usize,
        trace: Vec<RoundRecord>,
    },
}

impl SolverOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, SolverOutcome::Success { .. })
    }

    pub fn trace(&self) -> &[RoundRecord] {
        match self {
            SolverOutcome::Success { trace, .. } | SolverOutcome::Fail { trace, .. } => trace,
        }
    }

    pub fn antichain(&self) -> Option<&[Str]> {
        match self {
            SolverOutcome::Success { antichain, .. } => Some(antichain),
            SolverOutcome::Fail { .. } => None,
        }
    }

    /// The trace as JSON lines.
    pub fn trace_jsonl(&self) -> String {
        self.trace()
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Advice {
    None,
    AvoidBad,
}

/// `K` rounds: find an antichain `A_k ⊆ S_k` of the scheduled size, pick a
/// member uniformly at random (members ordered by `phi_code`), restrict. After
/// the last round the restricted set must still be nonempty, so that a bad
/// last choice is detected as well.
pub fn probabilistic_sac_solve(
    set: &BranchingSet,
    rounds: usize,
    schedule: Schedule,
    seed: u64,
) -> Result<SolverOutcome> {
    solve(set, rounds, schedule, seed, Advice::None)
}

/// As the randomized procedure, but the choice ranges over the members of
/// `A_k` that the certificate does not flag as bad. With no bad members the
/// draws, and hence the output, coincide with the randomized run.
pub fn advised_sac_solve(set: &BranchingSet, rounds: usize, schedule: Schedule, seed: u64) -> Result<SolverOutcome> {
    if set.try_certificate().is_none() {
        return Err(Error::NoCertificate("advice needs a certified set".into()));
    }
    solve(set, rounds, schedule, seed, Advice::AvoidBad)
}

fn solve(set: &BranchingSet, rounds: usize, schedule: Schedule, seed: u64, advice: Advice) -> Result<SolverOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = SolverState::new(set, schedule);
    let mut trace = Vec::new();
    let certified = set.try_certificate().is_some();
    let fail = |state: &SolverState, trace: &mut Vec<RoundRecord>, a_size| -> Result<SolverOutcome> {
        let reason = if certified && !state.restricted_infinite()? {
            FailReason::BadChoiceCollapse
        } else {
            FailReason::SearchTimeout
        };
        trace.push(RoundRecord {
            k: state.round(),
            a_size,
            chosen: None,
            bad_present: None,
            outcome: reason.code().to_string(),
        });
        Ok(SolverOutcome::Fail {
            reason,
            round: state.round(),
            trace: std::mem::take(trace),
        })
    };
    for k in 0..rounds {
        let n = state.required_size();
        let a = match find_antichain_of_size(set, state.stream(), n, Some(usize::MAX)) {
            Ok(a) => a,
            Err(Error::BudgetExhausted(_)) => return fail(&state, &mut trace, 0),
            Err(e) => return Err(e),
        };
        if let Some(bad) = a.iter().find(|t| !state.admits(t)) {
            return Err(Error::Unsound(format!("{bad} found outside the restricted set")));
        }
        let bad = if certified {
            Some(bad_elements(set, state.chosen(), &a)?)
        } else {
            None
        };
        let candidates: Vec<&Str> = match (&bad, advice) {
            (Some(b), Advice::AvoidBad) => a.iter().filter(|t| !b.contains(t)).collect(),
            _ => a.iter().collect(),
        };
        if candidates.is_empty() {
            return fail(&state, &mut trace, a.len());
        }
        let sigma = candidates[rng.gen_range(0..candidates.len())].clone();
        trace.push(RoundRecord {
            k,
            a_size: a.len(),
            chosen: Some(sigma.clone()),
            bad_present: bad.as_ref().map(|b| !b.is_empty()),
            outcome: "chosen".into(),
        });
        state.choose(sigma);
    }
    if rounds > 0 && state.stream().next().is_none() {
        return fail(&state, &mut trace, 0);
    }
    Ok(SolverOutcome::Success {
        antichain: state.chosen,
        trace,
    })
}
