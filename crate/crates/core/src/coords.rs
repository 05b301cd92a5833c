//! Flat coordinate views of carrier elements.
//!
//! Every element handled by the crate can be written as a tuple of reals.
//! The default metrics are Euclidean on these coordinates, and the registry
//! uses them to move points across the command line.

use num::{BigRational, ToPrimitive};

pub trait Coords: Sized {
    /// Number of coordinates, when it does not depend on the value.
    const ARITY: Option<usize>;

    fn write_coords(&self, out: &mut Vec<f64>);

    fn read_coords(coords: &[f64]) -> Option<Self>;

    fn coords(&self) -> Vec<f64> {
        let mut out = Vec::new();
        self.write_coords(&mut out);
        out
    }
}

impl Coords for f64 {
    const ARITY: Option<usize> = Some(1);

    fn write_coords(&self, out: &mut Vec<f64>) {
        out.push(*self);
    }

    fn read_coords(coords: &[f64]) -> Option<Self> {
        match coords {
            [x] => Some(*x),
            _ => None,
        }
    }
}

impl Coords for BigRational {
    const ARITY: Option<usize> = Some(1);

    fn write_coords(&self, out: &mut Vec<f64>) {
        out.push(self.to_f64().unwrap_or(f64::NAN));
    }

    fn read_coords(coords: &[f64]) -> Option<Self> {
        match coords {
            [x] => BigRational::from_float(*x),
            _ => None,
        }
    }
}

impl Coords for () {
    const ARITY: Option<usize> = Some(0);

    fn write_coords(&self, _out: &mut Vec<f64>) {}

    fn read_coords(coords: &[f64]) -> Option<Self> {
        coords.is_empty().then_some(())
    }
}

impl Coords for Vec<f64> {
    const ARITY: Option<usize> = None;

    fn write_coords(&self, out: &mut Vec<f64>) {
        out.extend_from_slice(self);
    }

    fn read_coords(coords: &[f64]) -> Option<Self> {
        Some(coords.to_vec())
    }
}

impl<A: Coords, B: Coords> Coords for (A, B) {
    const ARITY: Option<usize> = match (A::ARITY, B::ARITY) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };

    fn write_coords(&self, out: &mut Vec<f64>) {
        self.0.write_coords(out);
        self.1.write_coords(out);
    }

    fn read_coords(coords: &[f64]) -> Option<Self> {
        let split = match (A::ARITY, B::ARITY) {
            (Some(a), _) => a,
            (None, Some(b)) => coords.len().checked_sub(b)?,
            (None, None) => return None,
        };
        if split > coords.len() {
            return None;
        }
        let (head, tail) = coords.split_at(split);
        Some((A::read_coords(head)?, B::read_coords(tail)?))
    }
}

/// Euclidean distance between two coordinate tuples; mismatched arity is infinitely far.
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

pub fn coord_distance<T: Coords>(a: &T, b: &T) -> f64 {
    euclidean(&a.coords(), &b.coords())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_with_vector_head_splits_from_the_end() {
        let p: (Vec<f64>, f64) = Coords::read_coords(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(p, (vec![1.0, 2.0], 3.0));
        assert_eq!(p.coords(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn scalar_rejects_wrong_arity() {
        assert!(f64::read_coords(&[1.0, 2.0]).is_none());
        assert!(<(f64, f64)>::read_coords(&[1.0]).is_none());
    }

    #[test]
    fn mismatched_lengths_are_infinitely_far() {
        assert!(euclidean(&[0.0], &[0.0, 1.0]).is_infinite());
        assert_eq!(euclidean(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
    }
}
