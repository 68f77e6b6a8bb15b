//! Matching oracle character-table rows to representation labels, by
//! evaluating label-level character formulas modulo the table prime.
//!
//! Every matcher is total and injective by construction: a row that no
//! label matches, or that two labels match, is a consistency error and
//! signals a bug in the label-level character values.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bn_theory::{all_labels, bn_char_value, AbelianWreathLabel, BnIrrepLabel, SignedClass};
use crate::char_oracle::dixon::CharTable;
use crate::char_oracle::modp::{addm, mulm, powm, root_of_unity};
use crate::combinatorics::{sym_char_value, Partition};
use crate::groups::element::WreathElement;
use crate::{Error, Result};

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    u64::try_from(r).expect("residue fits")
}

/// Generic row matcher: `candidates` holds one expected residue row per
/// label; each table row must match exactly one candidate.
pub fn match_rows<T: Clone + std::fmt::Debug>(
    table: &CharTable,
    candidates: &[(T, Vec<u64>)],
) -> Result<Vec<T>> {
    if candidates.len() != table.rows.len() {
        return Err(Error::Consistency(format!(
            "{} candidate labels for {} table rows",
            candidates.len(),
            table.rows.len()
        )));
    }
    let mut used = vec![false; candidates.len()];
    let mut out = Vec::with_capacity(table.rows.len());
    for (ri, row) in table.rows.iter().enumerate() {
        let mut hit = None;
        for (ci, (label, values)) in candidates.iter().enumerate() {
            if used[ci] || values != row {
                continue;
            }
            if hit.is_some() {
                return Err(Error::Consistency(format!(
                    "table row {ri} matches more than one label ({label:?} among them)"
                )));
            }
            hit = Some((ci, label.clone()));
        }
        let Some((ci, label)) = hit else {
            return Err(Error::Consistency(format!(
                "table row {ri} (degree {}) matches no label",
                table.degrees[ri]
            )));
        };
        used[ci] = true;
        out.push(label);
    }
    Ok(out)
}

/// Signed classes of the table of a full `B_n`, read off the class
/// representatives.
pub fn signed_classes_of_table(table: &CharTable, n: usize) -> Result<Vec<SignedClass>> {
    table
        .classes
        .reps
        .iter()
        .map(|rep| WreathElement::from_embedded(2, n, rep)?.signed_cycle_type())
        .collect()
}

/// Matches the rows of an oracle table of `B_n` to the partition-pair
/// labels, via exact `bn_char_value` reduced modulo the table prime.
pub fn match_bn_rows(table: &CharTable, n: u32) -> Result<Vec<BnIrrepLabel>> {
    let classes = signed_classes_of_table(table, n as usize)?;
    let p = table.prime;
    let mut candidates = Vec::new();
    for label in all_labels(n) {
        let values: Result<Vec<u64>> = classes
            .iter()
            .map(|c| Ok(bigint_mod(&bn_char_value(&label, c)?, p)))
            .collect();
        candidates.push((label, values?));
    }
    match_rows(table, &candidates)
}

/// Character value of an abelian-wreath label at a class given by colored
/// cycles `(length, residue, multiplicity)`, modulo `p`. `zeta` must be a
/// primitive `r`-th root of unity mod `p`.
///
/// Each cycle group is distributed over the `r` residue blocks with a
/// multinomial weight; block `d` contributes `zeta^(d * residue)` per cycle
/// it receives and a symmetric-group character value at its accumulated
/// cycle lengths. Only distributions whose per-block totals match the block
/// sizes contribute.
pub fn wreath_char_value_modp(
    label: &AbelianWreathLabel,
    cycles: &[(u32, u32, u32)],
    p: u64,
    zeta: u64,
) -> u64 {
    let r = label.r as usize;
    let block_sizes: Vec<u32> = label.blocks.iter().map(Partition::size).collect();

    struct State<'a> {
        label: &'a AbelianWreathLabel,
        block_sizes: &'a [u32],
        cycles: &'a [(u32, u32, u32)],
        p: u64,
        zeta: u64,
        lengths: Vec<Vec<u32>>,
        filled: Vec<u32>,
        total: u64,
    }

    fn binom_mod(n: u32, k: u32, p: u64) -> u64 {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k as u128 {
            num *= n as u128 - i;
            den *= i + 1;
        }
        ((num / den) % p as u128) as u64
    }

    fn push_cycles(state: &mut State<'_>, d: usize, len: u32, k: u32) {
        for _ in 0..k {
            state.lengths[d].push(len);
        }
        state.filled[d] += k * len;
    }

    fn pop_cycles(state: &mut State<'_>, d: usize, len: u32, k: u32) {
        state.filled[d] -= k * len;
        for _ in 0..k {
            state.lengths[d].pop();
        }
    }

    fn assign(state: &mut State<'_>, group: usize, weight: u64, zeta_exp: u64) {
        if group == state.cycles.len() {
            let mut value = weight;
            for (d, block) in state.label.blocks.iter().enumerate() {
                if state.filled[d] != state.block_sizes[d] {
                    return;
                }
                let ct = Partition::from_unsorted(state.lengths[d].clone());
                let cv = sym_char_value(block, &ct).expect("sizes agree");
                value = mulm(value, bigint_mod(&cv, state.p), state.p);
            }
            value = mulm(value, powm(state.zeta, zeta_exp, state.p), state.p);
            state.total = addm(state.total, value, state.p);
            return;
        }
        split(state, group, 0, state.cycles[group].2, weight, zeta_exp);
    }

    fn split(state: &mut State<'_>, group: usize, d: usize, remaining: u32, weight: u64, zeta_exp: u64) {
        let (len, residue, _) = state.cycles[group];
        let r = state.label.blocks.len();
        if d == r - 1 {
            let k = remaining;
            if state.filled[d] + k * len > state.block_sizes[d] {
                return;
            }
            push_cycles(state, d, len, k);
            let e = zeta_exp + d as u64 * residue as u64 * k as u64;
            assign(state, group + 1, weight, e);
            pop_cycles(state, d, len, k);
            return;
        }
        for k in 0..=remaining {
            if state.filled[d] + k * len > state.block_sizes[d] {
                break;
            }
            let w = mulm(weight, binom_mod(remaining, k, state.p), state.p);
            push_cycles(state, d, len, k);
            let e = zeta_exp + d as u64 * residue as u64 * k as u64;
            split(state, group, d + 1, remaining - k, w, e);
            pop_cycles(state, d, len, k);
        }
    }

    let mut state = State {
        label,
        block_sizes: &block_sizes,
        cycles,
        p,
        zeta,
        lengths: vec![Vec::new(); r],
        filled: vec![0; r],
        total: 0,
    };
    assign(&mut state, 0, 1, 0);
    state.total
}

/// Matches the rows of an oracle table of an abelian `(Z/r) wr S_n` to
/// residue-block labels.
pub fn match_wreath_rows(table: &CharTable, r: u32, n: u32) -> Result<Vec<AbelianWreathLabel>> {
    let p = table.prime;
    let zeta = root_of_unity(p, r as u64)?;
    let class_cycles: Result<Vec<Vec<(u32, u32, u32)>>> = table
        .classes
        .reps
        .iter()
        .map(|rep| {
            let w = WreathElement::from_embedded(r, n as usize, rep)?;
            let mut grouped: Vec<(u32, u32, u32)> = Vec::new();
            for (len, res) in w.colored_cycles() {
                match grouped.last_mut() {
                    Some((l, c, m)) if *l == len && *c == res => *m += 1,
                    _ => grouped.push((len, res, 1)),
                }
            }
            Ok(grouped)
        })
        .collect();
    let class_cycles = class_cycles?;
    let mut candidates = Vec::new();
    for label in AbelianWreathLabel::all(r, n) {
        let values: Vec<u64> = class_cycles
            .iter()
            .map(|cycles| wreath_char_value_modp(&label, cycles, p, zeta))
            .collect();
        candidates.push((label, values));
    }
    match_rows(table, &candidates)
}

/// The small factor on the trailing coordinates of a product subgroup
/// `B_head x G`. `None` is the trivial group on one trailing coordinate
/// (the `B_{n-1} x {id}` shape).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailKind {
    None,
    B1,
    B2,
    D2,
    H2,
    S2bar,
}

/// An irreducible of the tail factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TailIrrep {
    None,
    B1(BnIrrepLabel),
    B2(BnIrrepLabel),
    /// `D_2` linear characters `V_0..V_3` (`V_1` = eps, `V_2` kills the
    /// passive `S_2`, `V_3` their product).
    D2(u8),
    /// `H_2 = <u>` cyclic of order 4; index `k` is the character `u -> i^k`.
    H2(u8),
    S2bar(bool),
}

/// Label of an irreducible of `B_head x G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProductLabel {
    pub head: BnIrrepLabel,
    pub tail: TailIrrep,
}

fn tail_irreps(kind: TailKind) -> Vec<TailIrrep> {
    match kind {
        TailKind::None => vec![TailIrrep::None],
        TailKind::B1 => all_labels(1).into_iter().map(TailIrrep::B1).collect(),
        TailKind::B2 => all_labels(2).into_iter().map(TailIrrep::B2).collect(),
        TailKind::D2 => (0..4).map(TailIrrep::D2).collect(),
        TailKind::H2 => (0..4).map(TailIrrep::H2).collect(),
        TailKind::S2bar => vec![TailIrrep::S2bar(false), TailIrrep::S2bar(true)],
    }
}

fn tail_width(kind: TailKind) -> usize {
    match kind {
        TailKind::None | TailKind::B1 => 1,
        _ => 2,
    }
}

/// Value of a tail irreducible at the tail part of an element, mod p.
/// `zeta4` is a primitive fourth root (needed by `H_2` only).
fn tail_value(irrep: &TailIrrep, tail: &WreathElement, p: u64, zeta4: u64) -> Result<u64> {
    let minus_one = p - 1;
    let sign = |s: i32| if s >= 0 { 1u64 } else { minus_one };
    Ok(match irrep {
        TailIrrep::None => 1,
        TailIrrep::B1(l) | TailIrrep::B2(l) => {
            bigint_mod(&bn_char_value(l, &tail.signed_cycle_type()?)?, p)
        }
        TailIrrep::D2(i) => {
            let eps = tail.sigma.sign();
            let flip = if tail.f[0] == 0 { 1 } else { -1 };
            match i {
                0 => 1,
                1 => sign(eps),
                2 => sign(flip),
                3 => sign(eps * flip),
                _ => return Err(Error::InvalidArgument("D_2 character index".into())),
            }
        }
        TailIrrep::H2(k) => {
            // Identify the power of the generator u = (e_1, (1 2)).
            let exp = match (tail.f[0], tail.f[1], tail.sigma.is_identity()) {
                (0, 0, true) => 0u64,
                (1, 0, false) => 1,
                (1, 1, true) => 2,
                (0, 1, false) => 3,
                _ => return Err(Error::InvalidArgument("element outside H_2".into())),
            };
            powm(zeta4, exp * (*k as u64), p)
        }
        TailIrrep::S2bar(sgn) => {
            if *sgn {
                sign(tail.sigma.sign())
            } else {
                1
            }
        }
    })
}

/// Matches the rows of an oracle table of `B_head x G` (embedded on the
/// first `head` and last coordinates of `B_n`) to product labels.
pub fn match_product_rows(
    table: &CharTable,
    n: usize,
    kind: TailKind,
) -> Result<Vec<ProductLabel>> {
    let head = n - tail_width(kind);
    let p = table.prime;
    let zeta4 = if matches!(kind, TailKind::H2) { root_of_unity(p, 4)? } else { 0 };
    // Split each class representative into its head and tail parts.
    let mut parts = Vec::with_capacity(table.classes.len());
    for rep in &table.classes.reps {
        let w = WreathElement::from_embedded(2, n, rep)?;
        let head_elt = WreathElement::new(
            2,
            w.f[..head].to_vec(),
            crate::groups::perm::Perm::from_images(
                w.sigma.images()[..head].to_vec(),
            )?,
        )?;
        let tail_elt = WreathElement::new(
            2,
            w.f[head..].to_vec(),
            crate::groups::perm::Perm::from_images(
                w.sigma.images()[head..].iter().map(|&x| x - head as u8).collect(),
            )?,
        )?;
        parts.push((head_elt.signed_cycle_type()?, tail_elt));
    }
    let mut candidates = Vec::new();
    for head_label in all_labels(head as u32) {
        for tail_irrep in tail_irreps(kind) {
            let mut values = Vec::with_capacity(parts.len());
            for (head_class, tail_elt) in &parts {
                let hv = bigint_mod(&bn_char_value(&head_label, head_class)?, p);
                let tv = tail_value(&tail_irrep, tail_elt, p, zeta4)?;
                values.push(mulm(hv, tv, p));
            }
            candidates.push((
                ProductLabel { head: head_label.clone(), tail: tail_irrep },
                values,
            ));
        }
    }
    match_rows(table, &candidates)
}
