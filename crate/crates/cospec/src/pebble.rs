//! The k-pebble game deciding equivalence in first-order logic with k
//! variables (no counting).
//!
//! Positions are assignments of at most k pebble pairs, one vertex in each
//! graph per pebble. The Duplicator-winning set is the greatest fixpoint of:
//! start from all positions whose pebbled pairs form a partial isomorphism,
//! and repeatedly delete positions where some Spoiler move (pick a pebble,
//! place it on a vertex of either graph) has no surviving Duplicator
//! response. The Duplicator wins the game iff the empty position survives.
//!
//! The fixpoint is computed with response counters: for every reduced
//! position (one pebble lifted), pebble, side, and Spoiler target, the
//! number of surviving Duplicator responses. Deaths decrement counters;
//! a counter reaching zero kills every position over that reduced position.
//! Deletion order and causes are recorded so a winning Spoiler strategy can
//! be replayed as a concrete move sequence.

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Duplicator,
    Spoiler,
}

/// Which graph the Spoiler places a pebble in; the Duplicator answers in
/// the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpoilerMove {
    pub pebble: usize,
    pub side: Side,
    pub vertex: usize,
}

/// Game result. `spoiler_moves` is empty for a Duplicator win; otherwise it
/// is one winning line of play: the Spoiler's placements against the
/// Duplicator's most resilient answers, ending in a position whose pebbles
/// no longer form a partial isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameOutcome {
    pub winner: Winner,
    pub spoiler_moves: Vec<SpoilerMove>,
}

/// Cap on response-counter entries (the dominant allocation, 2 bytes each).
pub const MAX_GAME_ENTRIES: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PebbleError {
    #[error("the pebble game requires at least one pebble")]
    ZeroPebbles,
    #[error(
        "game state space needs {estimate} response counters, above the limit of {limit}; \
         fewer pebbles or smaller graphs required"
    )]
    StateSpaceTooLarge { estimate: u128, limit: u128 },
}

/// Winner of the k-pebble game on (g, h).
pub fn pebble_game(g: &Graph, h: &Graph, k: usize) -> Result<Winner, PebbleError> {
    Ok(pebble_game_outcome(g, h, k)?.winner)
}

/// Winner plus, for the Spoiler, a distinguishing move sequence.
pub fn pebble_game_outcome(g: &Graph, h: &Graph, k: usize) -> Result<GameOutcome, PebbleError> {
    if k == 0 {
        return Err(PebbleError::ZeroPebbles);
    }
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let pairs = ng * nh; // slot codes 0..pairs are placed pairs
    let base = pairs + 1; // slot code `pairs` is "pebble not placed"
    let max_n = ng.max(nh).max(1);

    let states128 = (base as u128).checked_pow(k as u32);
    let entries128 = states128
        .and_then(|s| s.checked_mul(k as u128))
        .and_then(|e| e.checked_mul(2 * max_n as u128));
    let entries = match entries128 {
        Some(e) if e <= MAX_GAME_ENTRIES => e as usize,
        _ => {
            return Err(PebbleError::StateSpaceTooLarge {
                estimate: entries128.unwrap_or(u128::MAX),
                limit: MAX_GAME_ENTRIES,
            })
        }
    };
    let states = states128.unwrap() as usize;

    let pows: Vec<usize> = (0..k).scan(1usize, |p, _| {
        let v = *p;
        *p *= base;
        Some(v)
    }).collect();
    let slot = |pos: usize, i: usize| pos / pows[i] % base;
    let replace = |pos: usize, i: usize, val: usize| pos - slot(pos, i) * pows[i] + val * pows[i];
    let decode = |code: usize| (code / nh, code % nh);
    // Counter layout: ((reduced position * k + pebble) * 2 + side) * max_n + target.
    let idx = |r: usize, i: usize, side: usize, w: usize| ((r * k + i) * 2 + side) * max_n + w;

    // Partial isomorphisms: equality pattern and adjacency must agree on
    // every pair of placed pebbles.
    let mut iso = vec![false; states];
    let mut alive = vec![false; states];
    let mut placed: Vec<(usize, usize)> = Vec::with_capacity(k);
    'pos: for pos in 0..states {
        placed.clear();
        for i in 0..k {
            let s = slot(pos, i);
            if s < pairs {
                let (u, v) = decode(s);
                for &(pu, pv) in &placed {
                    if (u == pu) != (v == pv) || g.has_edge(u, pu) != h.has_edge(v, pv) {
                        continue 'pos;
                    }
                }
                placed.push((u, v));
            }
        }
        iso[pos] = true;
        alive[pos] = true;
    }

    let mut counter = vec![0u16; entries];
    for pos in 0..states {
        if !alive[pos] {
            continue;
        }
        for i in 0..k {
            let s = slot(pos, i);
            if s < pairs {
                let (u, v) = decode(s);
                let r = replace(pos, i, pairs);
                counter[idx(r, i, 0, u)] += 1;
                counter[idx(r, i, 1, v)] += 1;
            }
        }
    }

    // rank: deletion timestamp (0 = never alive); cause: the unanswerable
    // Spoiler move that killed the position, packed as pebble|side|vertex.
    let mut rank = vec![0u32; states];
    let mut cause = vec![0u32; states];
    let mut time = 0u32;
    let mut stack: Vec<usize> = Vec::new();
    let pack = |i: usize, side: usize, w: usize| ((i << 17) | (side << 16) | w) as u32;

    let mut kill = |pos: usize,
                    c: u32,
                    alive: &mut Vec<bool>,
                    rank: &mut Vec<u32>,
                    cause: &mut Vec<u32>,
                    stack: &mut Vec<usize>| {
        alive[pos] = false;
        time += 1;
        rank[pos] = time;
        cause[pos] = c;
        stack.push(pos);
    };

    for pos in 0..states {
        if !alive[pos] {
            continue;
        }
        'challenge: for i in 0..k {
            let r = replace(pos, i, pairs);
            for w in 0..ng {
                if counter[idx(r, i, 0, w)] == 0 {
                    kill(pos, pack(i, 0, w), &mut alive, &mut rank, &mut cause, &mut stack);
                    break 'challenge;
                }
            }
            for w in 0..nh {
                if counter[idx(r, i, 1, w)] == 0 {
                    kill(pos, pack(i, 1, w), &mut alive, &mut rank, &mut cause, &mut stack);
                    break 'challenge;
                }
            }
        }
    }

    while let Some(pos) = stack.pop() {
        for i in 0..k {
            let s = slot(pos, i);
            if s >= pairs {
                continue;
            }
            let (u, v) = decode(s);
            let r = replace(pos, i, pairs);
            for (side, w) in [(0, u), (1, v)] {
                let c = idx(r, i, side, w);
                counter[c] -= 1;
                if counter[c] == 0 {
                    // Every position over this reduced position now faces an
                    // unanswerable move.
                    for val in 0..base {
                        let q = replace(r, i, val);
                        if alive[q] {
                            kill(q, pack(i, side, w), &mut alive, &mut rank, &mut cause, &mut stack);
                        }
                    }
                }
            }
        }
    }

    let empty: usize = (0..k).map(|i| pairs * pows[i]).sum();
    if alive[empty] {
        return Ok(GameOutcome { winner: Winner::Duplicator, spoiler_moves: Vec::new() });
    }

    // Replay the Spoiler win from the deletion record: play the killing move,
    // then let the Duplicator answer with the longest-surviving response.
    // Ranks strictly decrease, so this terminates in a non-isomorphism.
    let mut moves = Vec::new();
    let mut pos = empty;
    while iso[pos] {
        let c = cause[pos];
        let pebble = (c >> 17) as usize;
        let side = (c >> 16) & 1;
        let w = (c & 0xffff) as usize;
        moves.push(SpoilerMove {
            pebble,
            side: if side == 0 { Side::Left } else { Side::Right },
            vertex: w,
        });
        let r = replace(pos, pebble, pairs);
        let n_other = if side == 0 { nh } else { ng };
        let mut best: Option<(u32, usize)> = None;
        for w2 in 0..n_other {
            let code = if side == 0 { w * nh + w2 } else { w2 * nh + w };
            let q = replace(r, pebble, code);
            debug_assert!(!alive[q], "killing move must have no surviving response");
            if best.map_or(true, |(br, _)| rank[q] > br) {
                best = Some((rank[q], q));
            }
        }
        match best {
            Some((q_rank, q)) => {
                debug_assert!(q_rank < rank[pos], "deletion ranks must decrease");
                pos = q;
            }
            // No Duplicator response exists at all (other side is empty).
            None => break,
        }
    }
    Ok(GameOutcome { winner: Winner::Spoiler, spoiler_moves: moves })
}
