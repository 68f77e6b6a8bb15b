//! Strong-Gelfand verdicts with witnesses, and the fast-path/oracle
//! agreement for named families.
//!
//!     cargo run --example strong_gelfand_pairs

use hyperoct::char_oracle::Oracle;
use hyperoct::classifier::{family_decision, Verdict};
use hyperoct::groups::descriptor::{make_subgroup, SubgroupDescriptor as D};

const BUDGET: u64 = 1 << 21;

fn main() {
    let oracle = Oracle::default();
    let b4 = make_subgroup(&D::Full(4), 2).unwrap().to_perm_group(BUDGET).unwrap();

    let cases = [
        D::Dn(4),
        D::Jn(4),
        D::PassiveSn(4),
        D::DiagFSn(4),
        D::DiagF(4),
        D::Product(Box::new(D::Full(3)), Box::new(D::Full(1))),
        D::Product(Box::new(D::Dn(3)), Box::new(D::Trivial(1))),
        D::TwistedDiagonal(Box::new(D::Full(3)), hyperoct::groups::CharName::Eps),
        D::Product(Box::new(D::Full(2)), Box::new(D::Hn(2))),
    ];
    println!("strong Gelfand in B_4?");
    for d in cases {
        let k = make_subgroup(&d, 2).unwrap().to_perm_group(BUDGET).unwrap();
        let verdict = oracle.is_strong_gelfand(&b4, &k).unwrap();
        let fast = family_decision(&d);
        let fast_note = match fast.verdict {
            Verdict::StrongGelfand => "fast path: yes",
            Verdict::Not => "fast path: no",
            Verdict::OutsideFastPath => "fast path: (oracle only)",
        };
        print!("  {:30} order {:>4}: {}", d.to_string(), k.order(), if verdict.holds { "yes" } else { "NO " });
        if let Some(w) = &verdict.witness {
            print!("  [witness multiplicity {}]", w.multiplicity);
        }
        println!("  {fast_note}");
    }

    // A plain (not strong) Gelfand pair: the diagonal flip subgroup.
    let diag = make_subgroup(&D::DiagF(4), 2).unwrap().to_perm_group(BUDGET).unwrap();
    println!(
        "\n(B_4, diag(F)): Gelfand = {}, strong Gelfand = {}",
        oracle.is_gelfand(&b4, &diag).unwrap().holds,
        oracle.is_strong_gelfand(&b4, &diag).unwrap().holds,
    );
}
