use std::collections::BTreeMap;

use super::constraints::{AcceptedSet, ConstraintParams};
use super::rng::SplitMix64;
use super::SeqError;
use crate::lattice::Bond;

/// Draws one sequence per bond by rejection sampling.
///
/// Bonds are visited in ascending order from a single generator seeded with
/// `seed`. For each bond, candidates of the bond's length are drawn base by
/// base until one passes every constraint against all sequences accepted so
/// far. The result depends only on `(bond_lengths, seed, params)`.
pub fn design_bonds(
    bond_lengths: &BTreeMap<Bond, usize>,
    seed: u64,
    params: &ConstraintParams,
) -> Result<BTreeMap<Bond, String>, SeqError> {
    params.validate(bond_lengths.values().copied().min())?;
    let mut rng = SplitMix64::new(seed);
    let mut accepted = AcceptedSet::new(params);
    let mut out = BTreeMap::new();
    let mut candidate = Vec::new();

    for (bond, &len) in bond_lengths {
        let mut found = false;
        for _ in 0..params.max_attempts {
            candidate.clear();
            candidate.extend((0..len).map(|_| rng.next_base()));
            if accepted.check(&candidate, params).is_ok() {
                found = true;
                break;
            }
        }
        if !found {
            return Err(SeqError::SequenceSpaceExhausted {
                bond: bond.to_string(),
                attempts: params.max_attempts,
                accepted: accepted.len(),
            });
        }
        accepted.insert(&candidate);
        let seq = String::from_utf8(candidate.clone()).expect("ACGT is ASCII");
        out.insert(bond.clone(), seq);
    }
    Ok(out)
}
