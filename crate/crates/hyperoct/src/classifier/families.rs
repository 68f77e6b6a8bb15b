//! Fast-path strong-Gelfand verdicts for the named subgroup families of
//! `B_n`, with the parity conditions attached to each family.

use serde::{Deserialize, Serialize};

use crate::groups::descriptor::{CharName, SubgroupDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    StrongGelfand,
    Not,
    /// The descriptor is not covered by the classification's fast path; the
    /// oracle is authoritative.
    OutsideFastPath,
}

/// A fast-path decision: the verdict and the rule it came from.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyDecision {
    pub descriptor: String,
    pub n: u32,
    pub verdict: Verdict,
    pub source: String,
}

fn decide(d: &SubgroupDescriptor, n: u32, verdict: Verdict, source: &str) -> FamilyDecision {
    FamilyDecision { descriptor: d.to_string(), n, verdict, source: source.into() }
}

/// Normalises a character name to its canonical representative on the given
/// factor: on `D_k` the characters `eps` and `eps*delta` restrict equally;
/// on `H_k`, `eps` and `delta` do; on the alternating kernel, `delta` and
/// `eps*delta` do.
fn canonical_char(factor: &SubgroupDescriptor, chi: CharName) -> CharName {
    use CharName::*;
    use SubgroupDescriptor::*;
    match (factor, chi) {
        (Dn(_), Eps) => EpsDelta,
        (Hn(_), Delta) | (Hn(_), Eps) => Delta,
        (FwrAn(_), EpsDelta) => Delta,
        _ => chi,
    }
}

fn odd(n: u32) -> bool {
    n % 2 == 1
}

/// The classification fast path: verdicts for every named family, including
/// all parity conditions and the small-`n` exceptional cases. Descriptors
/// outside the classified families come back `OutsideFastPath`.
pub fn family_decision(d: &SubgroupDescriptor) -> FamilyDecision {
    use CharName::*;
    use SubgroupDescriptor::*;
    let n = d.ambient_n();
    let sg = |src: &str| decide(d, n, Verdict::StrongGelfand, src);
    let not = |src: &str| decide(d, n, Verdict::Not, src);
    let sg_iff = |cond: bool, src: &str| {
        decide(d, n, if cond { Verdict::StrongGelfand } else { Verdict::Not }, src)
    };
    let outside = || decide(d, n, Verdict::OutsideFastPath, "oracle required");
    // Parity conditions on the product/twist/fiber rows hold from n = 5 on;
    // below that a failing condition does not imply a negative verdict
    // (e.g. H_2 x D_2 is strong Gelfand in B_4), so the oracle decides.
    let conditioned = |cond: bool, src: &str| {
        if cond {
            decide(d, n, Verdict::StrongGelfand, src)
        } else if n >= 5 {
            decide(d, n, Verdict::Not, src)
        } else {
            decide(d, n, Verdict::OutsideFastPath, "small-n case outside the parity regime")
        }
    };
    let negative = |src: &str| conditioned(false, src);

    match d {
        Full(_) => sg("whole group"),
        Dn(_) | Hn(_) | FwrAn(_) => sg("index-2 subgroups restrict multiplicity-freely"),
        Jn(_) => sg_iff(n % 4 != 2, "Stembridge subgroup: associators anticommute exactly when n = 2 mod 4"),
        PassiveSn(_) => sg_iff(n <= 5, "passive factor threshold: multiplicity 2 appears from n = 6 on"),
        Yn(_) => sg_iff(n <= 5, "outer-automorphism image of the passive factor; same threshold"),
        DiagFSn(_) => sg_iff(n <= 5, "central extension of the passive factor; same threshold"),
        DiagFAn(_) => sg_iff(n == 3 || n == 1, "alternating passive with center: exceptional at n = 3"),
        PassiveAn(_) => sg_iff(n == 3 || n <= 1, "alternating passive factor: exceptional at n = 3"),
        DiagF(_) => sg_iff(n <= 1, "central subgroup: multiplicity-free exactly while every irreducible is linear"),
        Trivial(_) => sg_iff(n <= 1, "trivial subgroup: multiplicity-free exactly while every irreducible is linear"),
        YoungWreath(parts) => {
            let mut sorted: Vec<u32> = parts.iter().copied().filter(|&x| x > 0).collect();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            match sorted.as_slice() {
                [] | [_] => sg("whole group"),
                [_, tail] if *tail <= 2 => sg("wreath products over two-part Young subgroups with small second part"),
                _ => not("Young-wreath subgroups need at most two parts, the second at most 2"),
            }
        }
        Product(a, b) => match (a.as_ref(), b.as_ref()) {
            // gamma = S_{n-1} x S_1 rows.
            (Full(m), Full(1)) if *m + 1 == n => sg("one-coordinate branching is multiplicity-free"),
            (Full(m), Trivial(1)) if *m + 1 == n => sg("one passive coordinate keeps branching multiplicity-free"),
            (Dn(m), Full(1)) if *m + 1 == n => sg("flip-kernel times the last full coordinate"),
            (Dn(m), Trivial(1)) if *m + 1 == n => {
                conditioned(odd(n), "flip-kernel with a bare last coordinate: parity condition")
            }
            (Hn(m), Full(1)) if *m + 1 == n => sg("matched-parity kernel times the last full coordinate"),
            (Hn(m), Trivial(1)) if *m + 1 == n => {
                conditioned(odd(n), "matched-parity kernel with a bare last coordinate: parity condition")
            }
            // gamma = S_{n-2} x S_2 direct rows.
            (Full(m), Full(2)) | (Full(m), Dn(2)) | (Full(m), Hn(2)) if *m + 2 == n => {
                sg("two-coordinate branching is multiplicity-free")
            }
            (Full(m), PassiveSn(2)) | (Full(m), Yn(2)) if *m + 2 == n => {
                sg("two passive coordinates keep branching multiplicity-free")
            }
            (Dn(m), Full(2)) | (Dn(m), Dn(2)) | (Dn(m), Hn(2)) if *m + 2 == n => {
                conditioned(odd(n), "flip-kernel head with an order >= 4 tail: parity condition")
            }
            (Hn(m), Full(2)) | (Hn(m), Dn(2)) | (Hn(m), Hn(2)) if *m + 2 == n => {
                conditioned(odd(n), "matched-parity head with an order >= 4 tail: parity condition")
            }
            (Dn(m), PassiveSn(2)) | (Hn(m), PassiveSn(2)) if *m + 2 == n && n >= 8 => {
                not("index-2 head with a passive tail pairs conjugate labels")
            }
            // Small-case extra: the passive factor of B_{n-1} times B_1.
            (PassiveSn(m), Full(1)) if *m + 1 == n => match n {
                0..=3 => sg("small-case search"),
                7.. => not("absent from the exhaustive one-coordinate family list"),
                _ => outside(),
            },
            _ => outside(),
        },
        TwistedDiagonal(a, chi) => {
            let chi = canonical_char(a, *chi);
            match (a.as_ref(), chi) {
                (Full(m), Eps) if *m + 1 == n => sg("sign-twisted graph of the full head"),
                (Full(m), Delta) | (Full(m), EpsDelta) if *m + 1 == n => {
                    conditioned(odd(n), "flip-twisted graphs of the full head: parity condition")
                }
                (Dn(m), EpsDelta) if *m + 1 == n => {
                    conditioned(odd(n), "twisted graph of the flip-kernel head: parity condition")
                }
                (Hn(m), Delta) if *m + 1 == n => {
                    conditioned(odd(n), "twisted graph of the matched-parity head: parity condition")
                }
                _ => outside(),
            }
        }
        FiberProduct(a, ca, b, cb) => {
            let ca = canonical_char(a, *ca);
            let cb = canonical_char(b, *cb);
            match (a.as_ref(), ca, b.as_ref(), cb) {
                // Tail D_2: chi_1 kills diag(F), chi_2/chi_3 kill the two
                // passive copies (conjugate pair).
                (Full(m), Delta | EpsDelta, Dn(2), Chi1) if *m + 2 == n => {
                    conditioned(odd(n), "order-4 Klein tail, diagonal-kernel character: odd n only")
                }
                (Full(m), Delta | EpsDelta, Dn(2), Chi2 | Chi3) if *m + 2 == n => {
                    conditioned(!odd(n), "order-4 Klein tail, passive-kernel character: even n only")
                }
                (Full(m), Eps, Dn(2), Chi2 | Chi3) if *m + 2 == n => {
                    sg("alternating-kernel head with passive-kernel Klein tail: both parities")
                }
                (Full(m), Eps, Dn(2), Chi1) if *m + 2 == n => {
                    negative("alternating-kernel head admits no diagonal-kernel fiber")
                }
                // Tail H_2: only the order-2 character can cut a fiber.
                (Full(m), Delta | EpsDelta, Hn(2), Chi2) if *m + 2 == n => {
                    conditioned(odd(n), "cyclic order-4 tail: odd n only")
                }
                (Full(m), Eps, Hn(2), Chi2) if *m + 2 == n => {
                    negative("alternating-kernel head with cyclic tail is never multiplicity-free")
                }
                // Tail B_2: the six flip-kernel combinations, odd n only.
                (Full(m), Delta | EpsDelta, Full(2), Delta | EpsDelta | Eps) if *m + 2 == n => {
                    conditioned(odd(n), "full tail fibers over a flip-type head character: odd n only")
                }
                (Full(m), Eps, Full(2), Delta | EpsDelta | Eps) if *m + 2 == n => {
                    negative("full tail fibers over the alternating-kernel head are never multiplicity-free")
                }
                _ => outside(),
            }
        }
        Raw { .. } => outside(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupDescriptor::*;

    #[test]
    fn stembridge_parity() {
        assert_eq!(family_decision(&Jn(3)).verdict, Verdict::StrongGelfand);
        assert_eq!(family_decision(&Jn(4)).verdict, Verdict::StrongGelfand);
        assert_eq!(family_decision(&Jn(5)).verdict, Verdict::StrongGelfand);
        assert_eq!(family_decision(&Jn(6)).verdict, Verdict::Not);
        assert_eq!(family_decision(&Jn(2)).verdict, Verdict::Not);
    }

    #[test]
    fn passive_threshold() {
        for n in 1..=5 {
            assert_eq!(family_decision(&PassiveSn(n)).verdict, Verdict::StrongGelfand);
        }
        assert_eq!(family_decision(&PassiveSn(6)).verdict, Verdict::Not);
    }

    #[test]
    fn table_rows() {
        // (H_{n-1} x {id}, n = 7) is strong Gelfand (n odd).
        let d = Product(Box::new(Hn(6)), Box::new(Trivial(1)));
        assert_eq!(family_decision(&d).verdict, Verdict::StrongGelfand);
        let d = Product(Box::new(Hn(7)), Box::new(Trivial(1)));
        assert_eq!(family_decision(&d).verdict, Verdict::Not);
        // Fiber of B_7 x B_2 at n = 9 (odd): strong Gelfand.
        let d = FiberProduct(
            Box::new(Full(7)),
            crate::groups::descriptor::CharName::Delta,
            Box::new(Full(2)),
            crate::groups::descriptor::CharName::Eps,
        );
        assert_eq!(family_decision(&d).verdict, Verdict::StrongGelfand);
    }

    #[test]
    fn char_canonicalisation() {
        // twist(D(6), eps) is the same subgroup as twist(D(6), epsdelta).
        let a = TwistedDiagonal(Box::new(Dn(6)), crate::groups::descriptor::CharName::Eps);
        let b = TwistedDiagonal(Box::new(Dn(6)), crate::groups::descriptor::CharName::EpsDelta);
        assert_eq!(family_decision(&a).verdict, family_decision(&b).verdict);
        assert_ne!(family_decision(&a).verdict, Verdict::OutsideFastPath);
    }
}
