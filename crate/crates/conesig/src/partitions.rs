//! Constrained integer partition enumeration.
//!
//! Partitions are generated in ascending form (parts nondecreasing) with an
//! in-place buffer, in the style of the accelerated ascending-composition
//! generators: each step either extends the current prefix with the smallest
//! admissible part or backtracks and bumps the last part. Constraints are
//! applied during generation, not by post-filtering.
//!
//! The `skip_two` constraint drops every partition containing a part equal
//! to 2. When parts are read as Lorentz factor sizes this loses nothing,
//! because `L2` is the quadrant: the partition with 1+1 in place of the 2
//! describes the same cone and is still emitted.

use std::ops::ControlFlow;

/// What to enumerate: partitions of `total` into parts from
/// `[min_part, max_part]`, optionally omitting partitions that contain a
/// part equal to 2.
///
/// `min_part` values below 1 are treated as 1. A constraint set with
/// `min_part > max_part` is unsatisfiable and yields no partitions (except
/// the empty partition of 0, which has no parts to violate the bounds).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PartitionConstraints {
    pub total: u32,
    pub min_part: u32,
    pub max_part: Option<u32>,
    pub skip_two: bool,
}

impl PartitionConstraints {
    /// Unconstrained partitions of `total`.
    pub fn new(total: u32) -> PartitionConstraints {
        PartitionConstraints {
            total,
            min_part: 1,
            max_part: None,
            skip_two: false,
        }
    }

    pub fn with_min_part(mut self, min_part: u32) -> PartitionConstraints {
        self.min_part = min_part;
        self
    }

    pub fn with_max_part(mut self, max_part: Option<u32>) -> PartitionConstraints {
        self.max_part = max_part;
        self
    }

    pub fn with_skip_two(mut self, skip_two: bool) -> PartitionConstraints {
        self.skip_two = skip_two;
        self
    }

    fn min(&self) -> u32 {
        self.min_part.max(1)
    }

    fn max(&self) -> u32 {
        self.max_part.unwrap_or(u32::MAX)
    }
}

/// Streaming partition generator. Not an `Iterator`: each call to
/// [`Partitions::next`] returns a view into the internal buffer, so the
/// caller must copy a partition to retain it across calls.
///
/// ```
/// use conesig::partitions::{partitions, PartitionConstraints};
///
/// let mut stream = partitions(PartitionConstraints::new(4).with_skip_two(true));
/// let mut all = Vec::new();
/// while let Some(parts) = stream.next() {
///     all.push(parts.to_vec());
/// }
/// assert_eq!(all, vec![vec![1, 1, 1, 1], vec![1, 3], vec![4]]);
/// ```
pub struct Partitions {
    constraints: PartitionConstraints,
    buf: Vec<u32>,
    rem: u32,
    state: State,
}

#[derive(PartialEq, Eq)]
enum State {
    Fresh,
    Mid,
    Done,
}

/// Streams every partition satisfying the constraints, each exactly once,
/// in lexicographically ascending order of the ascending part lists.
pub fn partitions(constraints: PartitionConstraints) -> Partitions {
    Partitions {
        constraints,
        buf: Vec::new(),
        rem: constraints.total,
        state: State::Fresh,
    }
}

/// Number of partitions the constraints admit, by running the stream dry.
pub fn partition_count(constraints: PartitionConstraints) -> u64 {
    let mut stream = partitions(constraints);
    let mut count = 0;
    while stream.next().is_some() {
        count += 1;
    }
    count
}

impl Partitions {
    /// Advances to the next partition and returns it as an ascending slice,
    /// or `None` when the space is exhausted.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[u32]> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Mid;
                if self.rem == 0 {
                    // The empty partition is the one partition of 0.
                    return Some(&self.buf);
                }
                self.advance(false)
            }
            State::Mid => self.advance(true),
        }
    }

    /// Depth-first continuation. When `backtrack` is set the buffer holds a
    /// complete partition that was just emitted; otherwise the current
    /// prefix is to be extended. Positions the buffer at the next complete
    /// partition or exhausts the space.
    fn advance(&mut self, mut backtrack: bool) -> Option<&[u32]> {
        loop {
            if backtrack {
                let Some(last) = self.buf.pop() else {
                    self.state = State::Done;
                    return None;
                };
                self.rem += last;
                match last.checked_add(1).and_then(|f| self.candidate_at_least(f)) {
                    Some(p) => {
                        self.buf.push(p);
                        self.rem -= p;
                        if self.rem == 0 {
                            return Some(&self.buf);
                        }
                        backtrack = false;
                    }
                    None => backtrack = true,
                }
            } else {
                let floor = self.buf.last().copied().unwrap_or(0);
                match self.candidate_at_least(floor) {
                    Some(p) => {
                        self.buf.push(p);
                        self.rem -= p;
                        if self.rem == 0 {
                            return Some(&self.buf);
                        }
                    }
                    None => backtrack = true,
                }
            }
        }
    }

    /// Smallest admissible next part that is at least `floor`, or `None` if
    /// the current node is a dead end. Admissible parts come in two groups:
    /// parts up to `rem / 2` (room remains for at least one more part of the
    /// same size) and the single part `rem` that closes the partition.
    fn candidate_at_least(&self, floor: u32) -> Option<u32> {
        let c = &self.constraints;
        let mut p = floor.max(c.min());
        if c.skip_two && p == 2 {
            p = 3;
        }
        if p <= (self.rem / 2).min(c.max()) {
            return Some(p);
        }
        let closing = self.rem;
        if closing >= p && closing <= c.max() && !(c.skip_two && closing == 2) {
            return Some(closing);
        }
        None
    }
}

/// Callbacks for an internal-iteration walk over the same partition space.
///
/// `push` is called when the walk wants to descend after placing `part`;
/// returning `false` vetoes the descent (the sink must leave its state
/// untouched in that case, and `pop` will not be called for the vetoed
/// part). `leaf` fires with the buffer holding a complete partition, and may
/// stop the whole walk by returning `Break`.
pub(crate) trait PartitionSink {
    fn push(&mut self, part: u32) -> bool;
    fn pop(&mut self, part: u32);
    fn leaf(&mut self) -> ControlFlow<()>;
}

/// Walks the constrained partition space, driving `sink`. The walk visits
/// exactly the partitions [`partitions`] would emit, in the same order, but
/// lets the sink prune subtrees at interior nodes.
pub(crate) fn walk_partitions(
    constraints: PartitionConstraints,
    sink: &mut dyn PartitionSink,
) -> ControlFlow<()> {
    fn rec(
        c: &PartitionConstraints,
        rem: u32,
        floor: u32,
        sink: &mut dyn PartitionSink,
    ) -> ControlFlow<()> {
        if rem == 0 {
            return sink.leaf();
        }
        let half = (rem / 2).min(c.max());
        let mut p = floor.max(c.min());
        loop {
            if c.skip_two && p == 2 {
                p = 3;
            }
            let part = if p <= half {
                p
            } else if rem >= p && rem <= c.max() && !(c.skip_two && rem == 2) {
                rem
            } else {
                return ControlFlow::Continue(());
            };
            if sink.push(part) {
                let flow = rec(c, rem - part, part, sink);
                sink.pop(part);
                flow?;
            }
            if part == rem {
                return ControlFlow::Continue(());
            }
            p = part + 1;
        }
    }
    rec(&constraints, constraints.total, 0, sink)
}
