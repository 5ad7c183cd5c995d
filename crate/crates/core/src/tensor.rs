//! Frame-component tensors over [`ParamScalar`].

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::{AlgError, Assignment, ParamScalar, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Up,
    Down,
}

/// Dense tensor in an orthonormal frame; components are stored row-major
/// over the slot list.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    dim: usize,
    slots: Vec<Slot>,
    comps: Vec<ParamScalar>,
}

/// Layout `[Down, Down, Up]`: `t[i][j][k]` is the `e_k` component of `T(e_i) e_j`.
pub const ONE_TWO: [Slot; 3] = [Slot::Down, Slot::Down, Slot::Up];
/// Layout `[Up, Down]`: `t[i][j]` is the `e_i` component of `T(e_j)`.
pub const ENDO: [Slot; 2] = [Slot::Up, Slot::Down];
pub const BILINEAR: [Slot; 2] = [Slot::Down, Slot::Down];

impl Tensor {
    pub fn zeros(dim: usize, slots: &[Slot]) -> Self {
        let len = dim.pow(slots.len() as u32);
        Tensor { dim, slots: slots.to_vec(), comps: vec![ParamScalar::zero(); len] }
    }

    pub fn from_fn(dim: usize, slots: &[Slot], mut f: impl FnMut(&[usize]) -> ParamScalar) -> Self {
        let mut t = Tensor::zeros(dim, slots);
        for (pos, idx) in t.indices().enumerate() {
            t.comps[pos] = f(&idx);
        }
        t
    }

    pub fn try_from_fn(dim: usize, slots: &[Slot], mut f: impl FnMut(&[usize]) -> Result<ParamScalar>) -> Result<Self> {
        let mut t = Tensor::zeros(dim, slots);
        for (pos, idx) in t.indices().enumerate() {
            t.comps[pos] = f(&idx)?;
        }
        Ok(t)
    }

    /// The metric of an orthonormal frame.
    pub fn metric(dim: usize) -> Self {
        Tensor::from_fn(dim, &BILINEAR, |i| ParamScalar::int(i64::from(i[0] == i[1])))
    }

    pub fn identity(dim: usize) -> Self {
        Tensor::from_fn(dim, &ENDO, |i| ParamScalar::int(i64::from(i[0] == i[1])))
    }

    pub fn vector(comps: Vec<ParamScalar>) -> Self {
        Tensor { dim: comps.len(), slots: vec![Slot::Up], comps }
    }

    pub fn covector(comps: Vec<ParamScalar>) -> Self {
        Tensor { dim: comps.len(), slots: vec![Slot::Down], comps }
    }

    /// Unit basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        Tensor::from_fn(dim, &[Slot::Up], |k| ParamScalar::int(i64::from(k[0] == i)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn components(&self) -> &[ParamScalar] {
        &self.comps
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.slots.len());
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &ParamScalar {
        &self.comps[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: ParamScalar) {
        let o = self.offset(idx);
        self.comps[o] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: &ParamScalar) -> Result<()> {
        let o = self.offset(idx);
        self.comps[o] = self.comps[o].try_add(value)?;
        Ok(())
    }

    /// All multi-indices in storage order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> {
        multi_indices(self.dim, self.slots.len())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(ParamScalar::is_zero)
    }

    pub fn nonzero(&self) -> Vec<(Vec<usize>, ParamScalar)> {
        self.indices().zip(&self.comps).filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
    }

    fn check_shape(&self, other: &Tensor) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.slots != other.slots {
            return Err(Error::Invalid(format!("slot layouts differ: {:?} vs {:?}", self.slots, other.slots)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_shape(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.try_add(b))
            .collect::<std::result::Result<_, AlgError>>()?;
        Ok(Tensor { dim: self.dim, slots: self.slots.clone(), comps })
    }

    pub fn try_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.map(|v| -v)
    }

    pub fn scale(&self, s: &ParamScalar) -> Result<Tensor> {
        self.try_map(|v| Ok(v.try_mul(s)?))
    }

    pub fn map(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Tensor {
        Tensor { dim: self.dim, slots: self.slots.clone(), comps: self.comps.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar>) -> Result<Tensor> {
        let comps = self.comps.iter().map(f).collect::<Result<_>>()?;
        Ok(Tensor { dim: self.dim, slots: self.slots.clone(), comps })
    }

    /// Substitute a value for one indeterminate in every component.
    pub fn substitute(&self, v: Var, value: &ParamScalar) -> Result<Tensor> {
        self.try_map(|c| Ok(c.substitute(v, value)?))
    }

    pub fn instantiate_partial(&self, assignment: &Assignment) -> Result<Tensor> {
        self.try_map(|c| Ok(c.instantiate_partial(assignment)?))
    }

    pub fn to_alpha(&self) -> Tensor {
        self.map(ParamScalar::to_alpha)
    }

    /// Nested JSON arrays of rendered components.
    pub fn to_json(&self) -> Value {
        fn nest(comps: &[ParamScalar], dim: usize, depth: usize) -> Value {
            if depth == 0 {
                return Value::String(comps[0].to_string());
            }
            let chunk = comps.len() / dim;
            Value::Array((0..dim).map(|i| nest(&comps[i * chunk..(i + 1) * chunk], dim, depth - 1)).collect())
        }
        nest(&self.comps, self.dim, self.slots.len())
    }

    /// Apply an endomorphism (layout [`ENDO`]) to a vector.
    pub fn apply(&self, v: &Tensor) -> Result<Tensor> {
        let n = self.dim;
        let mut out = vec![ParamScalar::zero(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..n {
                *slot = slot.try_add(&self.get(&[i, j]).try_mul(v.get(&[j]))?)?;
            }
        }
        Ok(Tensor::vector(out))
    }

    /// Inner product of two vectors in the orthonormal frame.
    pub fn dot(&self, other: &Tensor) -> Result<ParamScalar> {
        let mut acc = ParamScalar::zero();
        for (a, b) in self.comps.iter().zip(&other.comps) {
            acc = acc.try_add(&a.try_mul(b)?)?;
        }
        Ok(acc)
    }

    /// Evaluate a `(1,2)` tensor (layout [`ONE_TWO`]) on two vectors.
    pub fn apply2(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let n = self.dim;
        let mut out = vec![ParamScalar::zero(); n];
        for i in 0..n {
            if x.get(&[i]).is_zero() {
                continue;
            }
            for j in 0..n {
                let w = x.get(&[i]).try_mul(y.get(&[j]))?;
                if w.is_zero() {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = slot.try_add(&w.try_mul(self.get(&[i, j, k]))?)?;
                }
            }
        }
        Ok(Tensor::vector(out))
    }
}

pub fn multi_indices(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(rank as u32);
    (0..total).map(move |mut pos| {
        let mut idx = vec![0; rank];
        for slot in idx.iter_mut().rev() {
            *slot = pos % dim;
            pos /= dim;
        }
        idx
    })
}

/// Render multi-indices 1-based, as in `e1`, `e2`, ...
pub fn index_label(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}
