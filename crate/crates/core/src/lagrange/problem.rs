use crate::clifford::{class_of, in_quadratic_cone, ConjugacyClassId, Multivector, Signature};
use crate::error::{Error, Result};
use crate::ncpoly::Polynomial;

/// Ordered `(point, value)` pairs over one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationProblem {
    sig: Signature,
    pairs: Vec<(Multivector, Multivector)>,
}

impl InterpolationProblem {
    pub fn new(sig: Signature, pairs: Vec<(Multivector, Multivector)>) -> Result<Self> {
        for (x, w) in &pairs {
            sig.expect(x.sig())?;
            sig.expect(w.sig())?;
        }
        Ok(InterpolationProblem { sig, pairs })
    }

    pub fn from_vecs(
        sig: Signature,
        points: Vec<Multivector>,
        values: Vec<Multivector>,
    ) -> Result<Self> {
        if points.len() != values.len() {
            return Err(Error::LengthMismatch {
                points: points.len(),
                values: values.len(),
            });
        }
        Self::new(sig, points.into_iter().zip(values).collect())
    }

    /// Parse points and values from their text form.
    pub fn parse<S: AsRef<str>>(sig: Signature, points: &[S], values: &[S]) -> Result<Self> {
        let parse_all = |xs: &[S]| {
            xs.iter()
                .map(|s| Multivector::parse(sig, s.as_ref()))
                .collect::<Result<Vec<_>>>()
        };
        Self::from_vecs(sig, parse_all(points)?, parse_all(values)?)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn pairs(&self) -> &[(Multivector, Multivector)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn point(&self, i: usize) -> &Multivector {
        &self.pairs[i].0
    }

    pub fn value(&self, i: usize) -> &Multivector {
        &self.pairs[i].1
    }

    /// The same problem with its pairs reordered: entry `i` of the result is
    /// pair `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.pairs.len(), "not a permutation");
        InterpolationProblem {
            sig: self.sig,
            pairs: order.iter().map(|&i| self.pairs[i].clone()).collect(),
        }
    }
}

/// Data points sharing one conjugacy class, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    pub class: ConjugacyClassId,
    pub members: Vec<usize>,
}

impl ClassGroup {
    /// `d_j`.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `d_j' = min(d_j, 2)`, the number of conditions the group imposes.
    pub fn effective_size(&self) -> usize {
        self.members.len().min(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGrouping {
    /// Singleton classes first, then multi-point classes, each in order of
    /// first appearance.
    pub groups: Vec<ClassGroup>,
    /// `-1 + sum_j d_j'`; `None` for an empty problem.
    pub degree: Option<usize>,
}

/// Validate the problem and group its points by conjugacy class.
pub fn group_by_class(problem: &InterpolationProblem) -> Result<ClassGrouping> {
    let sig = problem.sig();
    if !(sig.is_quaternionic() || sig.is_r03()) {
        return Err(Error::UnsupportedSignature(sig));
    }
    let mut groups: Vec<ClassGroup> = Vec::new();
    for (i, (x, _)) in problem.pairs().iter().enumerate() {
        if !in_quadratic_cone(x) {
            return Err(Error::PointNotInCone(i));
        }
        if let Some(first) = (0..i).find(|&j| problem.point(j) == x) {
            return Err(Error::DuplicatePoint { first, second: i });
        }
        let class = class_of(x)?;
        match groups.iter_mut().find(|g| g.class == class) {
            Some(g) => {
                if sig.is_r03() {
                    return Err(Error::MultiPointClassInR03 {
                        first: g.members[0],
                        second: i,
                        class: Box::new(class),
                    });
                }
                g.members.push(i);
            }
            None => groups.push(ClassGroup {
                class,
                members: vec![i],
            }),
        }
    }
    let (mut ordered, multi): (Vec<_>, Vec<_>) = groups.into_iter().partition(|g| g.size() == 1);
    ordered.extend(multi);
    let conditions: usize = ordered.iter().map(ClassGroup::effective_size).sum();
    Ok(ClassGrouping {
        groups: ordered,
        degree: conditions.checked_sub(1),
    })
}

/// Outcome of the collinearity test on one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Collinearity {
    /// `slope` is the common difference quotient, absent for fewer than two
    /// points.
    Holds { slope: Option<Multivector> },
    /// The quotient at member `h` (1-based, `h >= 3`) differs from the one at
    /// member 2.
    Violated { h: usize },
}

/// Check `(x_2 - x_1)^-1 (w_2 - w_1) = (x_h - x_1)^-1 (w_h - w_1)` for all
/// `h >= 3`. Errors only when a point difference is a zero divisor.
pub fn check_collinearity(points: &[Multivector], values: &[Multivector]) -> Result<Collinearity> {
    assert_eq!(points.len(), values.len());
    if points.len() < 2 {
        return Ok(Collinearity::Holds { slope: None });
    }
    let quotient = |h: usize| -> Result<Multivector> {
        Ok(&(&points[h] - &points[0]).inverse()? * &(&values[h] - &values[0]))
    };
    let slope = quotient(1)?;
    for h in 2..points.len() {
        if quotient(h)? != slope {
            return Ok(Collinearity::Violated { h: h + 1 });
        }
    }
    Ok(Collinearity::Holds { slope: Some(slope) })
}

/// True iff `p` takes every prescribed value exactly.
pub fn verify_interpolant(p: &Polynomial, problem: &InterpolationProblem) -> bool {
    p.sig() == problem.sig()
        && problem
            .pairs()
            .iter()
            .all(|(x, w)| p.eval(x).map(|v| &v == w).unwrap_or(false))
}

/// `P(x) - w` for every pair.
pub fn residuals(p: &Polynomial, problem: &InterpolationProblem) -> Result<Vec<Multivector>> {
    problem
        .pairs()
        .iter()
        .map(|(x, w)| Ok(&p.eval(x)? - w))
        .collect()
}
