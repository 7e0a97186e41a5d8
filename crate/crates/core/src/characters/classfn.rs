use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::exactnum::{int, BigRat, CycNum};
use crate::grouptheory::FinGroup;
use crate::{Error, Result};

/// A function constant on conjugacy classes, indexed in the group's class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FinGroup>,
    values: Vec<CycNum>,
}

impl ClassFunction {
    pub fn new(group: Arc<FinGroup>, values: Vec<CycNum>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::Shape(format!(
                "{} values for a group with {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn trivial(group: Arc<FinGroup>) -> Self {
        let values = vec![CycNum::one(); group.num_classes()];
        ClassFunction { group, values }
    }

    pub fn zero(group: Arc<FinGroup>) -> Self {
        let values = vec![CycNum::zero(); group.num_classes()];
        ClassFunction { group, values }
    }

    /// Class function `g -> f(g)` evaluated on class representatives.
    pub fn from_fn(group: Arc<FinGroup>, f: impl Fn(usize) -> CycNum) -> Self {
        let values = group.classes().iter().map(|c| f(c.representative)).collect();
        ClassFunction { group, values }
    }

    /// Character of the defining representation of a matrix group.
    pub fn from_matrix_traces(group: Arc<FinGroup>) -> Result<Self> {
        let mut values = Vec::with_capacity(group.num_classes());
        for c in group.classes() {
            let m = group
                .element(c.representative)
                .as_matrix()
                .ok_or_else(|| Error::Shape("group is not a matrix group".into()))?;
            values.push(CycNum::from_int(m.trace()));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class_idx: usize) -> &CycNum {
        &self.values[class_idx]
    }

    /// Value at the identity, when it is a nonnegative integer.
    pub fn degree(&self) -> Option<BigInt> {
        self.values[0].as_integer().filter(|d| d >= &BigInt::from(0))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `(1/|G|) sum |C| a(C) conj(b(C))`.
    pub fn inner_product(&self, other: &Self) -> Result<CycNum> {
        self.same_group(other)?;
        let mut acc = CycNum::zero();
        for (i, c) in self.group.classes().iter().enumerate() {
            let term = &self.values[i] * &other.values[i].conj();
            acc = acc + term.scale(&int(c.size() as i64));
        }
        Ok(acc.scale(&BigRat::new(1.into(), BigInt::from(self.group.order()))))
    }

    /// Value of `f` on the class of squares.
    fn at_square(&self, class_idx: usize) -> &CycNum {
        &self.values[self.group.power_class(class_idx, 2)]
    }

    /// `(f(g)^2 - f(g^2)) / 2`.
    pub fn wedge_square(&self) -> Self {
        let half = BigRat::new(1.into(), 2.into());
        let values = (0..self.values.len())
            .map(|i| (&self.values[i] * &self.values[i] - self.at_square(i).clone()).scale(&half))
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    /// `(f(g)^2 + f(g^2)) / 2`.
    pub fn sym_square(&self) -> Self {
        let half = BigRat::new(1.into(), 2.into());
        let values = (0..self.values.len())
            .map(|i| (&self.values[i] * &self.values[i] + self.at_square(i).clone()).scale(&half))
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = int(k);
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(&k)).collect(),
        }
    }

    /// Restriction to a group whose elements all lie in this one.
    pub fn restrict(&self, sub: &Arc<FinGroup>) -> Result<Self> {
        let mut values = Vec::with_capacity(sub.num_classes());
        for c in sub.classes() {
            let g = sub.element(c.representative);
            let i = self.group.index_of(g).ok_or(Error::GroupMismatch)?;
            values.push(self.values[self.group.class_of(i)].clone());
        }
        Ok(ClassFunction { group: sub.clone(), values })
    }

    fn zip(&self, other: &Self, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Result<Self> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl<'a> Add<&'a ClassFunction> for &'a ClassFunction {
    type Output = Result<ClassFunction>;
    fn add(self, rhs: &ClassFunction) -> Self::Output {
        self.zip(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a ClassFunction> for &'a ClassFunction {
    type Output = Result<ClassFunction>;
    fn sub(self, rhs: &ClassFunction) -> Self::Output {
        self.zip(rhs, |a, b| a - b)
    }
}

/// Pointwise product, the character of the tensor product.
impl<'a> Mul<&'a ClassFunction> for &'a ClassFunction {
    type Output = Result<ClassFunction>;
    fn mul(self, rhs: &ClassFunction) -> Self::Output {
        self.zip(rhs, |a, b| a * b)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(CycNum::body).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassFunction{self}")
    }
}
