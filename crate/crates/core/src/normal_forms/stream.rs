use std::collections::HashSet;

use crate::matrix::Matrix;
use crate::ring::{Elem, Enumeration, Ring};

use super::KernelModule;

/// Enumerates coefficient tuples in `R^k`, skipping the zero tuple.
///
/// Tuples are grouped in shells: shell `s` holds every tuple of ring
/// enumeration indices in `[0, s]^k` whose largest index is exactly `s`,
/// visited in lexicographic order (first coordinate most significant). For
/// finite rings the cursor ends after shell `|R| - 1`.
#[derive(Clone, Debug)]
pub struct TupleCursor {
    elems: Vec<Elem>,
    source: Enumeration,
    k: usize,
    shell: usize,
    current: Vec<usize>,
    done: bool,
}

impl TupleCursor {
    pub fn new(ring: Ring, k: usize) -> Self {
        TupleCursor {
            elems: Vec::new(),
            source: Enumeration::new(ring),
            k,
            shell: 1,
            current: vec![0; k],
            done: k == 0,
        }
    }

    fn ensure(&mut self, idx: usize) -> bool {
        while self.elems.len() <= idx {
            match self.source.next() {
                Some(e) => self.elems.push(e),
                None => return false,
            }
        }
        true
    }

    /// Next tuple as enumeration indices.
    pub fn next_indices(&mut self) -> Option<Vec<usize>> {
        if self.done || !self.ensure(self.shell) {
            self.done = true;
            return None;
        }
        loop {
            // odometer in base shell+1, last coordinate fastest
            let mut pos = self.k;
            loop {
                if pos == 0 {
                    // shell exhausted
                    self.shell += 1;
                    if !self.ensure(self.shell) {
                        self.done = true;
                        return None;
                    }
                    self.current.iter_mut().for_each(|c| *c = 0);
                    break;
                }
                pos -= 1;
                self.current[pos] += 1;
                if self.current[pos] <= self.shell {
                    break;
                }
                self.current[pos] = 0;
            }
            if self.current.iter().copied().max() == Some(self.shell) {
                return Some(self.current.clone());
            }
        }
    }
}

impl Iterator for TupleCursor {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        let idx = self.next_indices()?;
        Some(idx.into_iter().map(|i| self.elems[i].clone()).collect())
    }
}

/// Pairwise-distinct nonzero vectors `sum_i c_i g_i` over the generators
/// `g_i`, ordered by the [`TupleCursor`] enumeration of the coefficients.
#[derive(Clone, Debug)]
pub struct SolutionStream {
    kernel: KernelModule,
    cursor: TupleCursor,
    seen: HashSet<Vec<Elem>>,
    remaining: Option<usize>,
}

impl SolutionStream {
    /// Zero generators are dropped; they contribute nothing.
    pub fn new(mut kernel: KernelModule) -> Self {
        kernel.basis.retain(|g| g.iter().any(|e| !e.is_zero()));
        let cursor = TupleCursor::new(kernel.ring, kernel.basis.len());
        SolutionStream { kernel, cursor, seen: HashSet::new(), remaining: None }
    }

    /// A stream over an explicit generating family of kernel vectors of
    /// `defining`.
    pub fn from_generators(ring: Ring, dim: usize, generators: Vec<Vec<Elem>>, defining: Matrix) -> Self {
        SolutionStream::new(KernelModule { ring, ambient_dim: dim, basis: generators, defining })
    }

    /// Stop after `count` emissions.
    pub fn limit(mut self, count: usize) -> Self {
        self.remaining = Some(count);
        self
    }

    pub fn kernel(&self) -> &KernelModule {
        &self.kernel
    }
}

impl Iterator for SolutionStream {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.remaining == Some(0) {
            return None;
        }
        loop {
            let coeffs = self.cursor.next()?;
            let v = self.kernel.combine(&coeffs);
            if v.iter().all(Elem::is_zero) || !self.seen.insert(v.clone()) {
                continue;
            }
            if let Some(r) = self.remaining.as_mut() {
                *r -= 1;
            }
            return Some(v);
        }
    }
}
