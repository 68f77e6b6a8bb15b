//! Symbolic subgroup descriptors, their text grammar, and constructors for
//! every subgroup family of `(Z/r) wr S_n` used in the classification.
//!
//! Descriptors embed lower-index factors on the first coordinates; the
//! complement acts on the last coordinates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::groups::element::WreathElement;
use crate::groups::perm::Perm;
use crate::groups::subgroup::Subgroup;
use crate::{Error, Result};

pub const GRAMMAR_HELP: &str = "descriptor grammar:
  B(n)        full wreath product (Z/r) wr S_n
  D(n)        kernel of delta (even flip count)
  H(n)        kernel of eps*delta (flip parity = permutation parity)
  J(n)        Stembridge subgroup, ker eps ∩ ker delta
  FA(n)       (Z/r) wr A_n = kernel of eps
  S(n)        passive symmetric factor {(0,sigma)}
  A(n)        passive alternating factor
  Y(n)        twisted passive factor (f = all-ones exactly on odd sigma)
  diagS(n)    diag(F) x S_n
  diagA(n)    diag(F) x A_n
  diag(n)     diag(F) alone
  triv(n)     trivial subgroup
  young(a,b,..)  (Z/r) wr (S_a x S_b x ..)
  X x Y       direct product on consecutive coordinate blocks
  twist(X, chi)     twisted diagonal {(x, chi(x))} in X x B_1
  fiber(X:chi, Y:psi)  kernel of chi*psi in X x Y
  chars: eps delta epsdelta chi1 chi2 chi3 (chi_i on D(2)/H(2) factors)";

/// Symbolic subgroup family with parameters. Materializes to a unique
/// subgroup of the stated ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupDescriptor {
    Full(u32),
    Dn(u32),
    Hn(u32),
    Jn(u32),
    FwrAn(u32),
    PassiveSn(u32),
    PassiveAn(u32),
    Yn(u32),
    DiagFSn(u32),
    DiagFAn(u32),
    DiagF(u32),
    Trivial(u32),
    YoungWreath(Vec<u32>),
    Product(Box<SubgroupDescriptor>, Box<SubgroupDescriptor>),
    TwistedDiagonal(Box<SubgroupDescriptor>, CharName),
    FiberProduct(Box<SubgroupDescriptor>, CharName, Box<SubgroupDescriptor>, CharName),
    Raw { n: u32, generators: Vec<WreathElement> },
}

/// Names of the linear characters that cut out index-2 subgroups: the three
/// `B_n` characters and the `chi_1, chi_2, chi_3` naming for `D_2` / `H_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharName {
    Eps,
    Delta,
    EpsDelta,
    Chi1,
    Chi2,
    Chi3,
}

impl fmt::Display for CharName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CharName::Eps => "eps",
            CharName::Delta => "delta",
            CharName::EpsDelta => "epsdelta",
            CharName::Chi1 => "chi1",
            CharName::Chi2 => "chi2",
            CharName::Chi3 => "chi3",
        };
        write!(f, "{s}")
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SubgroupDescriptor::*;
        match self {
            Full(n) => write!(f, "B({n})"),
            Dn(n) => write!(f, "D({n})"),
            Hn(n) => write!(f, "H({n})"),
            Jn(n) => write!(f, "J({n})"),
            FwrAn(n) => write!(f, "FA({n})"),
            PassiveSn(n) => write!(f, "S({n})"),
            PassiveAn(n) => write!(f, "A({n})"),
            Yn(n) => write!(f, "Y({n})"),
            DiagFSn(n) => write!(f, "diagS({n})"),
            DiagFAn(n) => write!(f, "diagA({n})"),
            DiagF(n) => write!(f, "diag({n})"),
            Trivial(n) => write!(f, "triv({n})"),
            YoungWreath(parts) => {
                write!(f, "young(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Product(a, b) => write!(f, "{a}x{b}"),
            TwistedDiagonal(a, chi) => write!(f, "twist({a}, {chi})"),
            FiberProduct(a, ca, b, cb) => write!(f, "fiber({a}:{ca}, {b}:{cb})"),
            Raw { n, generators } => write!(f, "raw(n={n}, {} gens)", generators.len()),
        }
    }
}

impl SubgroupDescriptor {
    /// Ambient wreath index `n` of the materialised subgroup.
    pub fn ambient_n(&self) -> u32 {
        use SubgroupDescriptor::*;
        match self {
            Full(n) | Dn(n) | Hn(n) | Jn(n) | FwrAn(n) | PassiveSn(n) | PassiveAn(n) | Yn(n)
            | DiagFSn(n) | DiagFAn(n) | DiagF(n) | Trivial(n) => *n,
            YoungWreath(parts) => parts.iter().sum(),
            Product(a, b) => a.ambient_n() + b.ambient_n(),
            TwistedDiagonal(a, _) => a.ambient_n() + 1,
            FiberProduct(a, _, b, _) => a.ambient_n() + b.ambient_n(),
            Raw { n, .. } => *n,
        }
    }

    /// Parses the descriptor grammar.
    pub fn parse(text: &str) -> Result<SubgroupDescriptor> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let d = parse_descriptor(&cleaned)?;
        Ok(d)
    }

    /// Order of the materialised subgroup, computed symbolically; `None`
    /// for raw generator lists.
    pub fn order_formula(&self, r: u32) -> Option<num_bigint::BigUint> {
        use num_bigint::BigUint;
        use num_traits::One;
        use SubgroupDescriptor::*;
        fn factorial(n: u32) -> num_bigint::BigUint {
            let mut f = num_bigint::BigUint::one();
            for k in 1..=n {
                f *= num_bigint::BigUint::from(k);
            }
            f
        }
        fn pow(r: u32, n: u32) -> num_bigint::BigUint {
            num_bigint::BigUint::from(r).pow(n)
        }
        Some(match self {
            Full(n) => pow(r, *n) * factorial(*n),
            Dn(n) | Hn(n) => {
                if *n == 0 {
                    BigUint::one()
                } else {
                    pow(2, *n - 1) * factorial(*n)
                }
            }
            FwrAn(n) => {
                if *n <= 1 {
                    pow(r, *n)
                } else {
                    pow(r, *n) * factorial(*n) / BigUint::from(2u32)
                }
            }
            Jn(n) => {
                if *n <= 1 {
                    BigUint::one()
                } else {
                    pow(2, *n - 2) * factorial(*n)
                }
            }
            PassiveSn(n) | Yn(n) => factorial(*n),
            PassiveAn(n) => {
                if *n <= 1 {
                    BigUint::one()
                } else {
                    factorial(*n) / BigUint::from(2u32)
                }
            }
            DiagFSn(n) => {
                if *n == 0 {
                    BigUint::one()
                } else {
                    BigUint::from(r) * factorial(*n)
                }
            }
            DiagFAn(n) => {
                if *n == 0 {
                    BigUint::one()
                } else if *n <= 2 {
                    BigUint::from(r)
                } else {
                    BigUint::from(r) * factorial(*n) / BigUint::from(2u32)
                }
            }
            DiagF(n) => {
                if *n == 0 {
                    BigUint::one()
                } else {
                    BigUint::from(r)
                }
            }
            Trivial(_) => BigUint::one(),
            YoungWreath(parts) => {
                let mut o = BigUint::one();
                for &m in parts {
                    o *= pow(r, m) * factorial(m);
                }
                o
            }
            Product(a, b) => a.order_formula(r)? * b.order_formula(r)?,
            TwistedDiagonal(a, _) => a.order_formula(r)?,
            FiberProduct(a, _, b, _) => a.order_formula(r)? * b.order_formula(r)? / BigUint::from(2u32),
            Raw { .. } => return None,
        })
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::DescriptorParse { msg: msg.into() }
}

/// Splits `s` on top-level `x` separators (those not inside parentheses).
fn split_product(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            'x' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_descriptor(s: &str) -> Result<SubgroupDescriptor> {
    let factors = split_product(s);
    if factors.len() > 1 {
        let mut iter = factors.into_iter();
        let mut acc = parse_atom(iter.next().unwrap())?;
        for rest in iter {
            acc = SubgroupDescriptor::Product(Box::new(acc), Box::new(parse_atom(rest)?));
        }
        return Ok(acc);
    }
    parse_atom(s)
}

fn parse_char(s: &str) -> Result<CharName> {
    match s {
        "eps" => Ok(CharName::Eps),
        "delta" => Ok(CharName::Delta),
        "epsdelta" => Ok(CharName::EpsDelta),
        "chi1" => Ok(CharName::Chi1),
        "chi2" => Ok(CharName::Chi2),
        "chi3" => Ok(CharName::Chi3),
        _ => Err(parse_err(format!("unknown character name `{s}`"))),
    }
}

fn parse_atom(s: &str) -> Result<SubgroupDescriptor> {
    use SubgroupDescriptor::*;
    let open = s
        .find('(')
        .ok_or_else(|| parse_err(format!("expected `name(args)`, got `{s}`")))?;
    if !s.ends_with(')') {
        return Err(parse_err(format!("unbalanced parentheses in `{s}`")));
    }
    let name = &s[..open];
    let args = &s[open + 1..s.len() - 1];
    let n_arg = || -> Result<u32> {
        args.parse::<u32>()
            .map_err(|_| parse_err(format!("expected an integer argument in `{s}`")))
    };
    match name {
        "B" => Ok(Full(n_arg()?)),
        "D" => Ok(Dn(n_arg()?)),
        "H" => Ok(Hn(n_arg()?)),
        "J" => Ok(Jn(n_arg()?)),
        "FA" => Ok(FwrAn(n_arg()?)),
        "S" => Ok(PassiveSn(n_arg()?)),
        "A" => Ok(PassiveAn(n_arg()?)),
        "Y" => Ok(Yn(n_arg()?)),
        "diagS" => Ok(DiagFSn(n_arg()?)),
        "diagA" => Ok(DiagFAn(n_arg()?)),
        "diag" => Ok(DiagF(n_arg()?)),
        "triv" => Ok(Trivial(n_arg()?)),
        "young" => {
            let parts: Result<Vec<u32>> = args
                .split(',')
                .map(|p| {
                    p.parse::<u32>()
                        .map_err(|_| parse_err(format!("bad composition part `{p}`")))
                })
                .collect();
            Ok(YoungWreath(parts?))
        }
        "twist" => {
            let comma = top_level_comma(args)
                .ok_or_else(|| parse_err("twist needs `twist(descriptor, char)`"))?;
            let inner = parse_descriptor(&args[..comma])?;
            let chi = parse_char(&args[comma + 1..])?;
            Ok(TwistedDiagonal(Box::new(inner), chi))
        }
        "fiber" => {
            let comma = top_level_comma(args)
                .ok_or_else(|| parse_err("fiber needs `fiber(desc:char, desc:char)`"))?;
            let (a, ca) = parse_colon(&args[..comma])?;
            let (b, cb) = parse_colon(&args[comma + 1..])?;
            Ok(FiberProduct(Box::new(a), ca, Box::new(b), cb))
        }
        _ => Err(parse_err(format!("unknown family `{name}`"))),
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn parse_colon(s: &str) -> Result<(SubgroupDescriptor, CharName)> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ':' if depth == 0 => {
                return Ok((parse_descriptor(&s[..i])?, parse_char(&s[i + 1..])?));
            }
            _ => {}
        }
    }
    Err(parse_err(format!("expected `descriptor:char` in `{s}`")))
}

/// Value of a `CharName` at a wreath element of its domain subgroup, as a
/// sign. `chi1/chi2/chi3` follow the `D_2` and `H_2` naming: on `D_2`,
/// `chi1` kills `diag(F)`, `chi2` kills the passive `S_2`, `chi3` kills its
/// conjugate; on `H_2` only `chi2` (the order-2 power) is valid here.
fn char_sign(chi: CharName, x: &WreathElement, domain: &SubgroupDescriptor) -> Result<i32> {
    let eps = x.sigma.sign();
    let delta = if x.flip_count() % 2 == 0 { 1 } else { -1 };
    match chi {
        CharName::Eps => Ok(eps),
        CharName::Delta => Ok(delta),
        CharName::EpsDelta => Ok(eps * delta),
        CharName::Chi1 | CharName::Chi2 | CharName::Chi3 => {
            // Only meaningful on the 2-coordinate factors D_2 / H_2.
            let offset = x.n() - 2;
            let f1 = x.f[offset];
            match (domain, chi) {
                (SubgroupDescriptor::Dn(2), CharName::Chi1) => Ok(eps),
                (SubgroupDescriptor::Dn(2), CharName::Chi2) => {
                    Ok(if f1 == 0 { 1 } else { -1 })
                }
                (SubgroupDescriptor::Dn(2), CharName::Chi3) => {
                    Ok(if f1 == 0 { 1 } else { -1 } * eps)
                }
                (SubgroupDescriptor::Hn(2), CharName::Chi2) => Ok(eps),
                _ => Err(Error::InvalidArgument(format!(
                    "character {chi} is not an order-2 character of {domain}"
                ))),
            }
        }
    }
}

/// Whether the named character is nontrivial on the materialised subgroup.
fn char_nontrivial(chi: CharName, sub: &Subgroup, domain: &SubgroupDescriptor) -> Result<bool> {
    for g in sub.generators() {
        if char_sign(chi, g, domain)? == -1 {
            return Ok(true);
        }
    }
    Ok(false)
}

fn coxeter_flips(r: u32, n: usize) -> Vec<WreathElement> {
    let mut gens = Vec::new();
    if n >= 1 {
        gens.push(WreathElement::basis_flip(r, n, 1, 1).expect("n >= 1"));
    }
    for i in 0..n.saturating_sub(1) {
        gens.push(WreathElement::passive(
            r,
            Perm::from_cycles(n, &[&[i as u8, i as u8 + 1]]).expect("adjacent transposition"),
        ));
    }
    gens
}

fn three_cycles(r: u32, n: usize) -> Vec<WreathElement> {
    (2..n as u8)
        .map(|k| WreathElement::passive(r, Perm::from_cycles(n, &[&[0, 1, k]]).expect("3-cycle")))
        .collect()
}

fn require_r2(r: u32, what: &str) -> Result<()> {
    if r != 2 {
        return Err(Error::InvalidArgument(format!(
            "{what} is only defined for r = 2, ambient has r = {r}"
        )));
    }
    Ok(())
}

/// Embeds a subgroup of `(Z/r) wr S_m` into `(Z/r) wr S_n` at a coordinate
/// offset.
fn embed_at(g: &WreathElement, n: usize, offset: usize) -> WreathElement {
    let m = g.n();
    let mut f = vec![0u8; n];
    f[offset..offset + m].copy_from_slice(&g.f);
    let mut images: Vec<u8> = (0..n as u8).collect();
    for i in 0..m {
        images[offset + i] = offset as u8 + g.sigma.apply(i as u8);
    }
    WreathElement::new(g.r, f, Perm::from_images(images).expect("embedding permutes"))
        .expect("embedding stays in ambient")
}

/// Materialises a descriptor as a concrete subgroup of `(Z/r) wr S_n`.
pub fn make_subgroup(d: &SubgroupDescriptor, r: u32) -> Result<Subgroup> {
    use SubgroupDescriptor::*;
    let n = d.ambient_n() as usize;
    let gens: Vec<WreathElement> = match d {
        Full(_) => coxeter_flips(r, n),
        Dn(_) => {
            require_r2(r, "D_n")?;
            let mut gens: Vec<WreathElement> = coxeter_flips(r, n).split_off(usize::from(n >= 1));
            if n >= 2 {
                let mut f = vec![0u8; n];
                f[0] = 1;
                f[1] = 1;
                gens.push(WreathElement::new(r, f, Perm::identity(n))?);
            }
            gens
        }
        Hn(_) => {
            require_r2(r, "H_n")?;
            (0..n.saturating_sub(1))
                .map(|i| {
                    let mut f = vec![0u8; n];
                    f[i] = 1;
                    WreathElement::new(
                        r,
                        f,
                        Perm::from_cycles(n, &[&[i as u8, i as u8 + 1]]).expect("transposition"),
                    )
                    .expect("valid generator")
                })
                .collect()
        }
        Jn(_) => {
            require_r2(r, "J_n")?;
            let mut gens = Vec::new();
            if n >= 2 {
                let mut f = vec![0u8; n];
                f[0] = 1;
                f[1] = 1;
                gens.push(WreathElement::new(r, f, Perm::identity(n))?);
            }
            gens.extend(three_cycles(r, n));
            gens
        }
        FwrAn(_) => {
            let mut gens = Vec::new();
            if n <= 2 {
                for i in 1..=n {
                    gens.push(WreathElement::basis_flip(r, n, i, 1)?);
                }
            } else {
                gens.push(WreathElement::basis_flip(r, n, 1, 1)?);
                gens.extend(three_cycles(r, n));
            }
            gens
        }
        PassiveSn(_) => coxeter_flips(r, n).split_off(usize::from(n >= 1)),
        PassiveAn(_) => three_cycles(r, n),
        Yn(_) => {
            require_r2(r, "Y_n")?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(WreathElement::new(
                    r,
                    vec![1; n],
                    Perm::from_cycles(n, &[&[0, 1]])?,
                )?);
            }
            gens.extend(three_cycles(r, n));
            gens
        }
        DiagFSn(_) | DiagFAn(_) | DiagF(_) => {
            let mut gens = Vec::new();
            if n >= 1 {
                gens.push(WreathElement::new(r, vec![1; n], Perm::identity(n))?);
            }
            match d {
                DiagFSn(_) => gens.extend(coxeter_flips(r, n).split_off(usize::from(n >= 1))),
                DiagFAn(_) => gens.extend(three_cycles(r, n)),
                _ => {}
            }
            gens
        }
        Trivial(_) => Vec::new(),
        YoungWreath(parts) => {
            let mut gens = Vec::new();
            let mut offset = 0usize;
            for &m in parts {
                let m = m as usize;
                if m >= 1 {
                    let block = make_subgroup(&Full(m as u32), r)?;
                    for g in block.generators() {
                        gens.push(embed_at(g, n, offset));
                    }
                }
                offset += m;
            }
            gens
        }
        Product(a, b) => {
            let na = a.ambient_n() as usize;
            let left = make_subgroup(a, r)?;
            let right = make_subgroup(b, r)?;
            let mut gens: Vec<WreathElement> =
                left.generators().iter().map(|g| embed_at(g, n, 0)).collect();
            gens.extend(right.generators().iter().map(|g| embed_at(g, n, na)));
            gens
        }
        TwistedDiagonal(a, chi) => {
            require_r2(r, "twisted diagonals")?;
            let left = make_subgroup(a, r)?;
            if !char_nontrivial(*chi, &left, a)? {
                return Err(Error::InvalidArgument(format!(
                    "character {chi} is trivial on {a}; the twisted diagonal degenerates to a product"
                )));
            }
            let t_last = WreathElement::basis_flip(r, n, n, 1)?;
            let mut gens = Vec::new();
            for g in left.generators() {
                let embedded = embed_at(g, n, 0);
                let val = char_sign(*chi, g, a)?;
                gens.push(if val == -1 {
                    embedded.group_op(&t_last)?
                } else {
                    embedded
                });
            }
            gens
        }
        FiberProduct(a, ca, b, cb) => {
            require_r2(r, "fiber products")?;
            let na = a.ambient_n() as usize;
            let left = make_subgroup(a, r)?;
            let right = make_subgroup(b, r)?;
            if !char_nontrivial(*ca, &left, a)? {
                return Err(Error::InvalidArgument(format!("character {ca} is trivial on {a}")));
            }
            if !char_nontrivial(*cb, &right, b)? {
                return Err(Error::InvalidArgument(format!("character {cb} is trivial on {b}")));
            }
            // Signed generator list of the product, with the character value
            // of the product character nu = ca * cb.
            let mut signed: Vec<(WreathElement, i32)> = Vec::new();
            for g in left.generators() {
                signed.push((embed_at(g, n, 0), char_sign(*ca, g, a)?));
            }
            for g in right.generators() {
                signed.push((embed_at(g, n, na), char_sign(*cb, g, b)?));
            }
            let pivot = signed
                .iter()
                .find(|(_, v)| *v == -1)
                .map(|(g, _)| g.clone())
                .expect("both characters are nontrivial");
            // Schreier generators for the index-2 kernel with transversal
            // {1, pivot}.
            let pivot_inv = pivot.inverse();
            let mut gens = Vec::new();
            for (g, v) in &signed {
                if *v == 1 {
                    gens.push(g.clone());
                    gens.push(pivot.group_op(g)?.group_op(&pivot_inv)?);
                } else {
                    gens.push(g.group_op(&pivot_inv)?);
                    gens.push(pivot.group_op(g)?);
                }
            }
            gens
        }
        Raw { generators, .. } => generators.clone(),
    };
    Subgroup::from_generators(r, n, Some(d.clone()), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupDescriptor::*;

    const BUDGET: u64 = 1 << 22;

    fn order(d: &SubgroupDescriptor) -> u64 {
        make_subgroup(d, 2).unwrap().order(BUDGET).unwrap()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order(&Full(3)), 48);
        assert_eq!(order(&Dn(3)), 24);
        assert_eq!(order(&Hn(3)), 24);
        assert_eq!(order(&Jn(4)), 96);
        assert_eq!(order(&FwrAn(3)), 24);
        assert_eq!(order(&PassiveSn(4)), 24);
        assert_eq!(order(&PassiveAn(4)), 12);
        assert_eq!(order(&Yn(3)), 6);
        assert_eq!(order(&DiagFSn(3)), 12);
        assert_eq!(order(&DiagFAn(3)), 6);
        assert_eq!(order(&DiagF(3)), 2);
        assert_eq!(order(&Trivial(5)), 1);
        assert_eq!(order(&YoungWreath(vec![2, 1])), 16);
        assert_eq!(order(&Product(Box::new(Dn(2)), Box::new(Full(1)))), 8);
    }

    #[test]
    fn kernel_predicates_match_generators() {
        for n in 1..=5usize {
            let dn = make_subgroup(&Dn(n as u32), 2).unwrap();
            let dn_set = dn.elements(BUDGET).unwrap();
            let bn = make_subgroup(&Full(n as u32), 2).unwrap();
            let expected: Vec<_> = bn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .filter(|e| e.flip_count() % 2 == 0)
                .cloned()
                .collect();
            assert_eq!(dn_set, expected.as_slice(), "D_{n}");

            let hn = make_subgroup(&Hn(n as u32), 2).unwrap();
            let hn_set = hn.elements(BUDGET).unwrap();
            let expected: Vec<_> = bn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .filter(|e| (e.flip_count() % 2 == 0) == (e.sigma.sign() == 1))
                .cloned()
                .collect();
            assert_eq!(hn_set, expected.as_slice(), "H_{n}");

            let jn = make_subgroup(&Jn(n as u32), 2).unwrap();
            let jn_set = jn.elements(BUDGET).unwrap();
            let expected: Vec<_> = bn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .filter(|e| e.flip_count() % 2 == 0 && e.sigma.sign() == 1)
                .cloned()
                .collect();
            assert_eq!(jn_set, expected.as_slice(), "J_{n}");

            let fan = make_subgroup(&FwrAn(n as u32), 2).unwrap();
            let expected: Vec<_> = bn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .filter(|e| e.sigma.sign() == 1)
                .cloned()
                .collect();
            assert_eq!(fan.elements(BUDGET).unwrap(), expected.as_slice(), "FwrA_{n}");

            let yn = make_subgroup(&Yn(n as u32), 2).unwrap();
            let expected: Vec<_> = bn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .filter(|e| {
                    if e.sigma.sign() == 1 {
                        e.f.iter().all(|&x| x == 0)
                    } else {
                        e.f.iter().all(|&x| x == 1)
                    }
                })
                .cloned()
                .collect();
            assert_eq!(yn.elements(BUDGET).unwrap(), expected.as_slice(), "Y_{n}");
        }
    }

    #[test]
    fn fiber_product_order_and_membership() {
        // fiber(B(2):delta, B(1):delta): the graph-like kernel has the order
        // of B_2 (index 2 in B_2 x B_1).
        let d = FiberProduct(Box::new(Full(2)), CharName::Delta, Box::new(Full(1)), CharName::Delta);
        let k = make_subgroup(&d, 2).unwrap();
        assert_eq!(k.order(BUDGET).unwrap(), 8);
        for e in k.elements(BUDGET).unwrap() {
            let head_flips = e.f[..2].iter().filter(|&&x| x != 0).count();
            let tail_flips = e.f[2..].iter().filter(|&&x| x != 0).count();
            assert_eq!(head_flips % 2, tail_flips % 2);
        }
    }

    #[test]
    fn twisted_diagonal_is_graph() {
        let d = TwistedDiagonal(Box::new(Full(2)), CharName::Delta);
        let k = make_subgroup(&d, 2).unwrap();
        assert_eq!(k.order(BUDGET).unwrap(), 8);
        for e in k.elements(BUDGET).unwrap() {
            let head_flips = e.f[..2].iter().filter(|&&x| x != 0).count() as i32;
            let delta_head = if head_flips % 2 == 0 { 1 } else { -1 };
            let tail = if e.f[2] == 0 { 1 } else { -1 };
            assert_eq!(delta_head, tail);
        }
    }

    #[test]
    fn grammar_round_trip() {
        for text in [
            "B(7)",
            "D(7)xB(1)",
            "fiber(B(7):eps, B(1):delta)",
            "twist(B(7), epsdelta)",
            "Y(5)",
            "J(6)",
            "young(3,2,1)",
            "fiber(B(5):delta, D(2):chi1)",
        ] {
            let d = SubgroupDescriptor::parse(text).unwrap();
            let printed = format!("{d}");
            let reparsed = SubgroupDescriptor::parse(&printed).unwrap();
            assert_eq!(d, reparsed, "{text} -> {printed}");
        }
        assert!(SubgroupDescriptor::parse("Q(3)").is_err());
        assert!(SubgroupDescriptor::parse("fiber(B(3):eps)").is_err());
    }

    #[test]
    fn yn_is_the_automorphism_image_of_the_passive_factor() {
        // The outer automorphism (f, sigma) -> (f + 1, sigma) on odd sigma
        // maps the passive factor onto Y_n.
        for n in 1..=4u32 {
            let passive = make_subgroup(&PassiveSn(n), 2).unwrap();
            let yn = make_subgroup(&Yn(n), 2).unwrap();
            let image: Vec<_> = passive
                .elements(BUDGET)
                .unwrap()
                .iter()
                .map(|e| {
                    if e.sigma.sign() == 1 {
                        e.clone()
                    } else {
                        let f = e.f.iter().map(|&x| x ^ 1).collect();
                        crate::groups::element::WreathElement::new(2, f, e.sigma.clone()).unwrap()
                    }
                })
                .collect();
            let mut image_fps: Vec<u128> =
                image.iter().map(|e| e.embed_sym().fingerprint()).collect();
            image_fps.sort_unstable();
            let yn_fps: Vec<u128> = yn
                .elements(BUDGET)
                .unwrap()
                .iter()
                .map(|e| e.embed_sym().fingerprint())
                .collect();
            assert_eq!(image_fps, yn_fps, "n = {n}");
        }
    }

    #[test]
    fn flip_kernels_need_r_equal_2() {
        assert!(make_subgroup(&Dn(3), 3).is_err());
        assert!(make_subgroup(&Hn(3), 3).is_err());
        assert!(make_subgroup(&Yn(3), 3).is_err());
        assert!(make_subgroup(&Full(3), 3).is_ok());
    }

    #[test]
    fn degenerate_twist_is_rejected() {
        // delta is trivial on the passive factor.
        let d = TwistedDiagonal(Box::new(PassiveSn(3)), CharName::Delta);
        assert!(make_subgroup(&d, 2).is_err());
    }
}
