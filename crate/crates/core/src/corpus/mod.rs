//! Constructors for the test corpus and the default corpus list.

mod affine;
mod basic;
mod classical;
mod field;

use std::fmt;

pub use crate::permcore::load_group;
pub use affine::{automorphism_on_elements, make_affine_action};
pub use basic::{
    make_alternating, make_cyclic, make_dihedral, make_elementary_abelian, make_quaternion, make_symmetric,
};
pub use classical::{make_gl, make_psl, make_sl};
pub use field::Field;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::permcore::{direct_product, parse_group, GroupHandle, Permutation, SubgroupRef};

/// Group files shipped with the crate, by corpus name.
pub const GROUP_FILES: &[(&str, &str)] = &[("M11", include_str!("../../corpus/m11.grp"))];

/// Known facts about a corpus group, used only as test expectations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Annotations {
    pub order: u128,
    pub soluble: Option<bool>,
    pub simple: Option<bool>,
}

#[derive(Clone)]
pub struct CorpusEntry {
    pub name: String,
    /// Constructor call that produced the group, e.g. `psl(2,7)`.
    pub builder: String,
    pub group: GroupHandle,
    pub annotations: Annotations,
}

impl fmt::Debug for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CorpusEntry")
            .field("name", &self.name)
            .field("builder", &self.builder)
            .field("annotations", &self.annotations)
            .finish()
    }
}

impl CorpusEntry {
    /// Compares the group against its annotations.
    pub fn check_annotations(&self) -> Result<()> {
        let g = &self.group;
        let bad = |what: String| Err(Error::Malformed(format!("{}: {}", self.name, what)));
        if g.order() != self.annotations.order {
            return bad(format!("order {} but annotated {}", g.order(), self.annotations.order));
        }
        if let Some(s) = self.annotations.soluble {
            if crate::subgrp::is_soluble(g) != s {
                return bad(format!("solubility differs from annotation {s}"));
            }
        }
        if let Some(s) = self.annotations.simple {
            if crate::subgrp::is_simple(g)? != s {
                return bad(format!("simplicity differs from annotation {s}"));
            }
        }
        Ok(())
    }
}

/// `G = Q ⋊ E` with `E` elementary abelian of order `p^n` acting faithfully
/// on the nilpotent `p'`-group `Q`.
#[derive(Clone)]
pub struct KhukhroEntry {
    pub name: String,
    pub group: GroupHandle,
    pub q: SubgroupRef,
    pub e: SubgroupRef,
    pub p: u64,
    pub n: u32,
}

fn entry(
    name: &str,
    builder: String,
    group: GroupHandle,
    order: u128,
    soluble: Option<bool>,
    simple: Option<bool>,
) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), builder, group, annotations: Annotations { order, soluble, simple } }
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn gl_order(n: u32, q: u128) -> u128 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

fn psl_order(n: u32, q: u128) -> u128 {
    let d = crate::permcore::gcd(n as u64, q as u64 - 1) as u128;
    gl_order(n, q) / (q - 1) / d
}

/// Semidirect product from automorphism images of `q`'s generators.
fn semidirect(q: &GroupHandle, automorphisms: &[Vec<Permutation>], p: u64, n: u32, name: &str) -> Result<KhukhroEntry> {
    let group = make_affine_action(q, automorphisms)?;
    let qn = q.generators().len();
    let gens = group.generators();
    let q_sub = group.subgroup(gens[..qn].to_vec())?;
    let e_sub = group.subgroup(gens[qn..].to_vec())?;
    Ok(KhukhroEntry { name: name.to_string(), group, q: q_sub, e: e_sub, p, n })
}

/// Faithful actions of elementary abelian groups on nilpotent coprime groups.
pub fn khukhro_entries() -> Result<Vec<KhukhroEntry>> {
    let mut out = Vec::new();

    let c3 = make_cyclic(3)?;
    let a = c3.generators()[0].clone();
    out.push(semidirect(&c3, &[vec![a.inverse()]], 2, 1, "C3:C2")?);

    let c7 = make_cyclic(7)?;
    let a = c7.generators()[0].clone();
    out.push(semidirect(&c7, &[vec![a.pow(2)]], 3, 1, "C7:C3")?);

    let e9 = make_elementary_abelian(3, 2)?;
    let (a, b) = (e9.generators()[0].clone(), e9.generators()[1].clone());
    let autos = [vec![a.inverse(), b.clone()], vec![a.clone(), b.inverse()]];
    out.push(semidirect(&e9, &autos, 2, 2, "(C3xC3):(C2xC2)")?);

    let v4 = make_elementary_abelian(2, 2)?;
    let (a, b) = (v4.generators()[0].clone(), v4.generators()[1].clone());
    out.push(semidirect(&v4, &[vec![b.clone(), a.compose(&b)]], 3, 1, "(C2xC2):C3")?);

    let q8 = make_quaternion()?;
    let (i, j) = (q8.generators()[0].clone(), q8.generators()[1].clone());
    out.push(semidirect(&q8, &[vec![j.clone(), i.compose(&j)]], 3, 1, "Q8:C3")?);

    Ok(out)
}

/// The default corpus in its fixed declared order.
pub fn corpus_default() -> Result<Vec<CorpusEntry>> {
    corpus_with_caps(Caps::default())
}

pub fn corpus_with_caps(caps: Caps) -> Result<Vec<CorpusEntry>> {
    let yes = Some(true);
    let no = Some(false);
    let mut out = Vec::new();

    for n in 2..=12u128 {
        let simple = Some(crate::arith::is_prime(n as u64));
        out.push(entry(&format!("C{n}"), format!("cyclic({n})"), make_cyclic(n as usize)?, n, yes, simple));
    }
    for (p, k) in [(2u64, 2usize), (2, 3), (3, 2)] {
        let order = (p as u128).pow(k as u32);
        out.push(entry(
            &format!("E{order}"),
            format!("elementary_abelian({p},{k})"),
            make_elementary_abelian(p, k)?,
            order,
            yes,
            no,
        ));
    }
    for n in [4usize, 5, 6] {
        let simple = no;
        out.push(entry(
            &format!("D{}", 2 * n),
            format!("dihedral({n})"),
            make_dihedral(n)?,
            2 * n as u128,
            yes,
            simple,
        ));
    }
    for n in 3..=6usize {
        out.push(entry(
            &format!("S{n}"),
            format!("symmetric({n})"),
            make_symmetric(n)?,
            factorial(n as u128),
            Some(n <= 4),
            no,
        ));
    }
    for n in 4..=7usize {
        let big = n >= 5;
        out.push(entry(
            &format!("A{n}"),
            format!("alternating({n})"),
            make_alternating(n)?,
            factorial(n as u128) / 2,
            Some(!big),
            Some(big),
        ));
    }
    out.push(entry("Q8", "quaternion()".into(), make_quaternion()?, 8, yes, no));
    out.push(entry("SL(2,3)", "sl(2,3)".into(), make_sl(2, 3)?, 24, yes, no));
    out.push(entry("SL(2,5)", "sl(2,5)".into(), make_sl(2, 5)?, 120, no, no));
    for (n, q, soluble) in [(2u32, 2u64, true), (2, 3, true), (3, 2, false), (2, 5, false)] {
        let name = format!("GL({n},{q})");
        let order = gl_order(n, q as u128);
        // GL(3,2) coincides with PSL(3,2)
        let simple = Some((n, q) == (3, 2));
        out.push(entry(&name, format!("gl({n},{q})"), make_gl(n as usize, q)?, order, Some(soluble), simple));
    }
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let name = format!("PSL(2,{q})");
        out.push(entry(&name, format!("psl(2,{q})"), make_psl(2, q)?, psl_order(2, q as u128), no, yes));
    }
    out.push(entry("PSL(3,2)", "psl(3,2)".into(), make_psl(3, 2)?, 168, no, yes));

    let s4 = make_symmetric(4)?;
    let a5 = make_alternating(5)?;
    out.push(entry("S4xA5", "symmetric(4) x alternating(5)".into(), direct_product(&s4, &a5), 1440, no, no));
    out.push(entry(
        "SL(2,5)xC7",
        "sl(2,5) x cyclic(7)".into(),
        direct_product(&make_sl(2, 5)?, &make_cyclic(7)?),
        840,
        no,
        no,
    ));
    out.push(entry("A5xA5", "alternating(5) x alternating(5)".into(), direct_product(&a5, &a5), 3600, no, no));
    out.push(entry("A5xC6", "alternating(5) x cyclic(6)".into(), direct_product(&a5, &make_cyclic(6)?), 360, no, no));

    for k in khukhro_entries()? {
        let order = k.group.order();
        out.push(entry(&k.name, format!("affine({})", k.name), k.group, order, yes, no));
    }

    for (name, text) in GROUP_FILES {
        out.push(entry(name, format!("file({})", name.to_lowercase()), parse_group(text)?, 7920, no, yes));
    }

    for e in &mut out {
        e.group = e.group.recapped(caps);
    }
    Ok(out)
}

/// Looks up a corpus group by name, ignoring ASCII case.
pub fn builtin(name: &str) -> Result<GroupHandle> {
    corpus_default()?
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| e.group)
        .ok_or_else(|| Error::Unsupported(format!("no corpus group named `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let corpus = corpus_default().unwrap();
        let mut names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), corpus.len());
        assert!(corpus.len() >= 30);
    }

    #[test]
    fn khukhro_actions_are_faithful() {
        for k in khukhro_entries().unwrap() {
            assert_eq!(k.e.order(), (k.p as u128).pow(k.n), "{}", k.name);
            assert_eq!(k.group.order(), k.q.order() * k.e.order(), "{}", k.name);
            assert!(k.q.is_normal());
        }
    }
}
