use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::SkewError;

/// Upper bound on enumerated group orders.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// A permutation of `{0, .., n-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SkewError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(SkewError::BadPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images))
    }

    /// Cycle notation with 1-based points, e.g. `(1 2)(3 4)`; `()` is the
    /// identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self, SkewError> {
        let bad = |m: &str| SkewError::BadPermutation(format!("{s:?}: {m}"));
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let end = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let points = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>, _>>()?;
            for (i, &p) in points.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(bad("point out of range"));
                }
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad("cycles are not disjoint"));
                }
                images[p - 1] = points[(i + 1) % points.len()] - 1;
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group given by generators, with all elements enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: BTreeSet<Perm>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Self, SkewError> {
        if let Some(p) = generators.iter().find(|p| p.degree() != degree) {
            return Err(SkewError::BadPermutation(format!("{p} does not act on {degree} points")));
        }
        let id = Perm::identity(degree);
        let mut elements = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if elements.insert(y.clone()) {
                    if elements.len() > MAX_GROUP_ORDER {
                        return Err(SkewError::GroupTooLarge(MAX_GROUP_ORDER));
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup { degree, generators, elements })
    }

    pub fn parse(degree: usize, gens: &[&str]) -> Result<Self, SkewError> {
        let gens = gens.iter().map(|s| Perm::parse(s, degree)).collect::<Result<Vec<_>, _>>()?;
        Self::generate(degree, gens)
    }

    /// `S_n` from a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> Result<Self, SkewError> {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(Perm(t));
            gens.push(Perm((0..n).map(|i| (i + 1) % n).collect()));
        }
        Self::generate(n, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.is_subset(&g.elements)
    }

    /// `g K g^-1 = K` for every `g` in `self`.
    pub fn normalizes(&self, k: &PermGroup) -> bool {
        self.elements.iter().all(|g| conjugate_stable(g, k))
    }

    /// The subgroup of `self` generated by `gens`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup, SkewError> {
        if let Some(p) = gens.iter().find(|p| !self.contains(p)) {
            return Err(SkewError::NotASubgroup(format!("{p} is not in the group")));
        }
        Self::generate(self.degree, gens)
    }

    /// Every subgroup, by closing cyclic subgroups under joins. Ordered by
    /// order, then element lists.
    pub fn all_subgroups(&self) -> Result<Vec<PermGroup>, SkewError> {
        let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
        let mut groups: Vec<PermGroup> = Vec::new();
        let add = |g: PermGroup, found: &mut BTreeSet<Vec<Perm>>, groups: &mut Vec<PermGroup>| {
            if found.insert(g.elements.iter().cloned().collect()) {
                groups.push(g);
            }
        };
        add(Self::trivial(self.degree), &mut found, &mut groups);
        for x in &self.elements {
            add(Self::generate(self.degree, vec![x.clone()])?, &mut found, &mut groups);
        }
        let mut i = 0;
        while i < groups.len() {
            for j in 0..i {
                let mut gens = groups[i].generators.clone();
                gens.extend(groups[j].generators.iter().cloned());
                let join = Self::generate(self.degree, gens)?;
                add(join, &mut found, &mut groups);
            }
            i += 1;
        }
        groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.iter().cmp(b.elements.iter())));
        Ok(groups)
    }
}

fn conjugate_stable(g: &Perm, k: &PermGroup) -> bool {
    let gi = g.inverse();
    k.elements.iter().all(|x| k.contains(&g.compose(x).compose(&gi)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerQuotient {
    pub normalizer_order: usize,
    /// `|N_G(K) / K|`
    pub order: usize,
    /// One representative per coset `nK`, the least element of each.
    pub coset_reps: Vec<Perm>,
}

/// `N_G(K) / K` by enumeration.
pub fn normalizer_quotient(g: &PermGroup, k: &PermGroup) -> Result<NormalizerQuotient, SkewError> {
    if !k.is_subgroup_of(g) {
        return Err(SkewError::NotASubgroup("K is not contained in G".into()));
    }
    let normalizer: Vec<&Perm> = g.elements.iter().filter(|x| conjugate_stable(x, k)).collect();
    let mut covered: BTreeSet<Perm> = BTreeSet::new();
    let mut coset_reps = Vec::new();
    for n in &normalizer {
        if covered.contains(*n) {
            continue;
        }
        coset_reps.push((*n).clone());
        for x in &k.elements {
            covered.insert(n.compose(x));
        }
    }
    Ok(NormalizerQuotient { normalizer_order: normalizer.len(), order: coset_reps.len(), coset_reps })
}

/// `[E : base] = [Ehat : base] / [Ehat : E]`, the degree of the fixed
/// field read off from the outer degree count.
pub fn degree_bookkeeping(deg_ehat_over_base: u64, deg_ehat_over_e: u64) -> Result<u64, SkewError> {
    if deg_ehat_over_e == 0 || !deg_ehat_over_base.is_multiple_of(deg_ehat_over_e) {
        return Err(SkewError::NonDivisible { total: deg_ehat_over_base, part: deg_ehat_over_e });
    }
    Ok(deg_ehat_over_base / deg_ehat_over_e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation() {
        let p = Perm::parse("(1 2 3)", 4).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(Perm::parse("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse("(1 5)", 3).is_err());
        let q = Perm::parse("(1 2)", 3).unwrap();
        // apply (1 2 3) after (1 2): 1 -> 2 -> 3
        assert_eq!(Perm::parse("(1 2 3)", 3).unwrap().compose(&q).images()[0], 2);
    }

    #[test]
    fn symmetric_orders() {
        for (n, o) in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)] {
            assert_eq!(PermGroup::symmetric(n).unwrap().order(), o);
        }
        assert_eq!(PermGroup::symmetric(8), Err(SkewError::GroupTooLarge(MAX_GROUP_ORDER)));
    }

    #[test]
    fn normalizer_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let q = normalizer_quotient(&s3, &PermGroup::trivial(3)).unwrap();
        assert_eq!(q.order, 6);
        let k = s3.subgroup(vec![Perm::parse("(1 2)", 3).unwrap()]).unwrap();
        let q = normalizer_quotient(&s3, &k).unwrap();
        assert_eq!((q.normalizer_order, q.order), (2, 1));
        let s4 = PermGroup::symmetric(4).unwrap();
        let v4 = PermGroup::parse(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        let q = normalizer_quotient(&s4, &v4).unwrap();
        assert_eq!((q.normalizer_order, q.order, q.coset_reps.len()), (24, 6, 6));
        let outside = PermGroup::parse(4, &["(1 2)"]).unwrap();
        assert!(matches!(normalizer_quotient(&s3, &outside), Err(SkewError::NotASubgroup(_))));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(PermGroup::symmetric(3).unwrap().all_subgroups().unwrap().len(), 6);
        assert_eq!(PermGroup::symmetric(4).unwrap().all_subgroups().unwrap().len(), 30);
    }

    #[test]
    fn bookkeeping() {
        assert_eq!(degree_bookkeeping(6, 2), Ok(3));
        assert_eq!(degree_bookkeeping(5, 5), Ok(1));
        assert_eq!(degree_bookkeeping(6, 4), Err(SkewError::NonDivisible { total: 6, part: 4 }));
    }
}
