//! The Queuesort map `q`, as a queue-with-bypass machine and as the
//! equivalent procedure that slides LTR maxima to the right.

use std::collections::VecDeque;
use std::fmt;

use crate::perm::{avoids_321_slice, ltr_positions, InjectiveWord, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// Insert the current input entry at the back of the queue.
    Queue,
    /// Send the current input entry straight to the output.
    Bypass,
    /// Move the front of the queue to the output.
    Output,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Queue => 'Q',
            Op::Bypass => 'B',
            Op::Output => 'O',
        }
    }
}

/// The sequence of machine operations performed on one input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpTrace(Vec<Op>);

impl OpTrace {
    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    /// Checks the counting constraints for an input of length `n`: every
    /// entry is queued or bypassed once, every queued entry leaves once, and
    /// no prefix pops more than it pushed.
    pub fn is_well_formed(&self, n: usize) -> bool {
        let (mut q, mut b, mut o) = (0usize, 0usize, 0usize);
        for op in &self.0 {
            match op {
                Op::Queue => q += 1,
                Op::Bypass => b += 1,
                Op::Output => o += 1,
            }
            if o > q {
                return false;
            }
        }
        q + b == n && o == q
    }

    /// Re-executes the trace on `input`; `None` if the trace does not fit.
    pub fn replay(&self, input: &[u32]) -> Option<Vec<u32>> {
        let mut queue = VecDeque::new();
        let mut out = Vec::with_capacity(input.len());
        let mut next = input.iter();
        for op in &self.0 {
            match op {
                Op::Queue => queue.push_back(*next.next()?),
                Op::Bypass => out.push(*next.next()?),
                Op::Output => out.push(queue.pop_front()?),
            }
        }
        (next.next().is_none() && queue.is_empty()).then_some(out)
    }
}

impl fmt::Display for OpTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|op| write!(f, "{}", op.symbol()))
    }
}

/// Runs the queue-with-bypass machine on `p`.
pub fn run_queue(p: &Permutation) -> (Permutation, OpTrace) {
    let (out, trace) = run_queue_values(p.values());
    (Permutation::from_vec_unchecked(out), trace)
}

/// [`run_queue`] on an arbitrary injective word.
pub fn run_queue_word(w: &InjectiveWord) -> (InjectiveWord, OpTrace) {
    let (out, trace) = run_queue_values(w.values());
    (InjectiveWord::from_vec_unchecked(out), trace)
}

fn run_queue_values(input: &[u32]) -> (Vec<u32>, OpTrace) {
    let mut queue: VecDeque<u32> = VecDeque::new();
    let mut out = Vec::with_capacity(input.len());
    let mut ops = Vec::with_capacity(2 * input.len());
    for &x in input {
        if queue.back().is_none_or(|&back| back < x) {
            queue.push_back(x);
            ops.push(Op::Queue);
        } else {
            while let Some(&front) = queue.front() {
                if front >= x {
                    break;
                }
                out.push(queue.pop_front().expect("front exists"));
                ops.push(Op::Output);
            }
            out.push(x);
            ops.push(Op::Bypass);
        }
    }
    while let Some(front) = queue.pop_front() {
        out.push(front);
        ops.push(Op::Output);
    }
    (out, OpTrace(ops))
}

/// Computes `q(w)` by sliding LTR maxima: from the rightmost to the
/// leftmost, each LTR maximum is swapped rightwards until the entry to its
/// right is larger or it reaches the end.
pub fn run_moves(w: &InjectiveWord) -> InjectiveWord {
    InjectiveWord::from_vec_unchecked(apply_moves(w.values()))
}

pub(crate) fn apply_moves(values: &[u32]) -> Vec<u32> {
    let mut a = values.to_vec();
    apply_moves_in_place(&mut a);
    a
}

/// In-place form of [`run_moves`] on a scratch buffer.
pub fn apply_moves_in_place(a: &mut [u32]) {
    let n = a.len();
    for &pos in ltr_positions(a).iter().rev() {
        let mut i = pos - 1;
        while i + 1 < n && a[i + 1] < a[i] {
            a.swap(i, i + 1);
            i += 1;
        }
    }
}

/// The intermediate words of [`run_moves`], one per LTR maximum that moves,
/// starting with the input itself.
pub fn move_steps(w: &InjectiveWord) -> Vec<InjectiveWord> {
    let mut a = w.values().to_vec();
    let n = a.len();
    let mut steps = vec![w.clone()];
    for &pos in ltr_positions(&a).iter().rev() {
        let mut i = pos - 1;
        let mut moved = false;
        while i + 1 < n && a[i + 1] < a[i] {
            a.swap(i, i + 1);
            i += 1;
            moved = true;
        }
        if moved {
            steps.push(InjectiveWord::from_vec_unchecked(a.clone()));
        }
    }
    steps
}

/// Values of the LTR maxima of `w` that change position under `q`.
pub fn moved_values(w: &InjectiveWord) -> Vec<u32> {
    let mut a = w.values().to_vec();
    let n = a.len();
    let mut moved = Vec::new();
    for &pos in ltr_positions(&a).iter().rev() {
        let mut i = pos - 1;
        if i + 1 < n && a[i + 1] < a[i] {
            moved.push(a[i]);
        }
        while i + 1 < n && a[i + 1] < a[i] {
            a.swap(i, i + 1);
            i += 1;
        }
    }
    moved
}

/// Whether Queuesort outputs the identity on `p`.
pub fn is_sortable(p: &Permutation) -> bool {
    let out = apply_moves(p.values());
    let sortable = out.windows(2).all(|w| w[0] < w[1]);
    debug_assert_eq!(sortable, avoids_321_slice(p.values()));
    sortable
}
