//! Class fusion, restriction/induction multiplicities by Frobenius
//! reciprocity, and the (strong) Gelfand predicates.

use serde::{Deserialize, Serialize};

use crate::char_oracle::dixon::CharTable;
use crate::char_oracle::modp::{addm, invm, mulm};
use crate::groups::perm::PermGroup;
use crate::{Error, Result};

/// Map from subgroup class ids to ambient class ids. Requires the subgroup
/// elements to live on the ambient point set.
pub fn fusion_map(
    sub: &PermGroup,
    sub_table: &CharTable,
    ambient: &PermGroup,
    ambient_table: &CharTable,
) -> Result<Vec<usize>> {
    if !sub.is_subgroup_of(ambient) {
        return Err(Error::InvalidArgument(
            "fusion requires the subgroup's elements to be contained in the ambient group".into(),
        ));
    }
    sub_table
        .classes
        .reps
        .iter()
        .map(|rep| {
            ambient_table
                .classes
                .class_of_perm(ambient, rep)
                .ok_or_else(|| Error::Consistency("subgroup element missing from ambient".into()))
        })
        .collect()
}

/// Multiplicity `< res^G_K chi, psi >` of the `psi` row of the subgroup
/// table in the restriction of the `chi` row of the ambient table. Both
/// tables must share one prime.
pub fn restriction_mult(
    ambient_table: &CharTable,
    sub_table: &CharTable,
    fusion: &[usize],
    chi: usize,
    psi: usize,
) -> Result<u64> {
    if ambient_table.prime != sub_table.prime {
        return Err(Error::InvalidArgument(format!(
            "tables use different primes ({} vs {}); recompute over the pair prime",
            ambient_table.prime, sub_table.prime
        )));
    }
    let p = ambient_table.prime;
    let mut acc = 0u64;
    for j in 0..sub_table.num_classes() {
        let term = mulm(
            mulm(sub_table.classes.sizes[j] % p, ambient_table.rows[chi][fusion[j]], p),
            sub_table.rows[psi][sub_table.classes.inverse_map[j]],
            p,
        );
        acc = addm(acc, term, p);
    }
    let m = mulm(acc, invm(sub_table.order % p, p), p);
    // Genuine multiplicities are small nonnegative integers; a residue in
    // the upper half would indicate corrupted tables.
    if m > ambient_table.order {
        return Err(Error::Consistency(format!(
            "restriction multiplicity lifted to {m}, outside the sane range"
        )));
    }
    Ok(m)
}

/// `< ind_K^G psi, chi >`, by Frobenius reciprocity.
pub fn induce_mult(
    ambient_table: &CharTable,
    sub_table: &CharTable,
    fusion: &[usize],
    psi: usize,
    chi: usize,
) -> Result<u64> {
    restriction_mult(ambient_table, sub_table, fusion, chi, psi)
}

/// Witness of a multiplicity at least 2: row indices into the two tables,
/// their degrees, and the multiplicity.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultiplicityWitness {
    pub ambient_row: usize,
    pub ambient_degree: u64,
    pub sub_row: usize,
    pub sub_degree: u64,
    pub multiplicity: u64,
}

/// Verdict of a Gelfand-type predicate, with a witness on failure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairVerdict {
    pub holds: bool,
    pub witness: Option<MultiplicityWitness>,
}

/// Strong Gelfand: every restriction multiplicity is at most 1. Scans rows
/// in table order; the first failure is the witness.
pub fn is_strong_gelfand(
    ambient_table: &CharTable,
    sub_table: &CharTable,
    fusion: &[usize],
) -> Result<PairVerdict> {
    for chi in 0..ambient_table.rows.len() {
        for psi in 0..sub_table.rows.len() {
            let m = restriction_mult(ambient_table, sub_table, fusion, chi, psi)?;
            if m >= 2 {
                return Ok(PairVerdict {
                    holds: false,
                    witness: Some(MultiplicityWitness {
                        ambient_row: chi,
                        ambient_degree: ambient_table.degrees[chi],
                        sub_row: psi,
                        sub_degree: sub_table.degrees[psi],
                        multiplicity: m,
                    }),
                });
            }
        }
    }
    Ok(PairVerdict { holds: true, witness: None })
}

/// Gelfand: the induced trivial representation is multiplicity-free, i.e.
/// every `< res chi, 1_K >` is at most 1.
pub fn is_gelfand(
    ambient_table: &CharTable,
    sub_table: &CharTable,
    fusion: &[usize],
) -> Result<PairVerdict> {
    let psi = sub_table.trivial_row();
    for chi in 0..ambient_table.rows.len() {
        let m = restriction_mult(ambient_table, sub_table, fusion, chi, psi)?;
        if m >= 2 {
            return Ok(PairVerdict {
                holds: false,
                witness: Some(MultiplicityWitness {
                    ambient_row: chi,
                    ambient_degree: ambient_table.degrees[chi],
                    sub_row: psi,
                    sub_degree: sub_table.degrees[psi],
                    multiplicity: m,
                }),
            });
        }
    }
    Ok(PairVerdict { holds: true, witness: None })
}
