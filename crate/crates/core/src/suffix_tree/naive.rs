//! Reference construction: insert every coded suffix symbol by symbol into
//! an uncompacted trie, then compact. Codes come from
//! [`compute_code`](crate::opcore::compute_code), not from the `cnt` oracle.

use super::{EdgeSymbol, Node, OpSuffixTree, NONE};
use crate::error::{Error, Result};
use crate::opcore::compute_code;
use crate::sequence::Sequence;

pub const DEFAULT_NAIVE_CAP: usize = 2000;

pub fn naive_reference_tree(s: &Sequence) -> Result<OpSuffixTree> {
    naive_reference_tree_with_cap(s, DEFAULT_NAIVE_CAP)
}

struct TrieNode {
    symbol: EdgeSymbol,
    first_child: u32,
    next_sibling: u32,
    suffix: u32,
}

pub fn naive_reference_tree_with_cap(s: &Sequence, cap: usize) -> Result<OpSuffixTree> {
    let n = s.len();
    if n > cap {
        return Err(Error::CapExceeded { len: n, cap });
    }
    let mut trie = vec![TrieNode {
        symbol: EdgeSymbol::Terminator,
        first_child: NONE,
        next_sibling: NONE,
        suffix: 0,
    }];
    for i in 1..=n {
        let code = compute_code(&s.as_slice()[i - 1..])?;
        let symbols = code
            .into_iter()
            .map(EdgeSymbol::Code)
            .chain(std::iter::once(EdgeSymbol::Terminator));
        let mut at = 0usize;
        for sym in symbols {
            let mut c = trie[at].first_child;
            while c != NONE && trie[c as usize].symbol != sym {
                c = trie[c as usize].next_sibling;
            }
            if c == NONE {
                c = trie.len() as u32;
                trie.push(TrieNode {
                    symbol: sym,
                    first_child: NONE,
                    next_sibling: trie[at].first_child,
                    suffix: 0,
                });
                trie[at].first_child = c;
            }
            at = c as usize;
        }
        trie[at].suffix = i as u32;
    }

    // compact: keep the root, the leaves and every branching node
    let mut nodes = vec![Node {
        parent: NONE,
        depth: 0,
        rep: 0,
        first: EdgeSymbol::Terminator,
        children: Vec::new(),
        suffix: 0,
    }];
    let mut leaf_of = vec![NONE; n];
    // (trie node, trie depth, compact parent, first symbol of the pending edge)
    let mut stack: Vec<(usize, usize, u32, EdgeSymbol)> = Vec::new();
    let push_children = |stack: &mut Vec<_>, trie: &[TrieNode], t: usize, depth: usize, parent: u32, first: Option<EdgeSymbol>| {
        let mut c = trie[t].first_child;
        while c != NONE {
            let sym = first.unwrap_or(trie[c as usize].symbol);
            stack.push((c as usize, depth + 1, parent, sym));
            c = trie[c as usize].next_sibling;
        }
    };
    push_children(&mut stack, &trie, 0, 0, 0, None);
    while let Some((t, depth, parent, first)) = stack.pop() {
        let mut kids = 0;
        let mut c = trie[t].first_child;
        while c != NONE {
            kids += 1;
            c = trie[c as usize].next_sibling;
        }
        let explicit = kids != 1 || trie[t].suffix != 0;
        if explicit {
            let id = nodes.len() as u32;
            let suffix = trie[t].suffix;
            nodes.push(Node {
                parent,
                depth: depth as u32,
                rep: suffix,
                first,
                children: Vec::new(),
                suffix,
            });
            nodes[parent as usize].children.push(id);
            if suffix != 0 {
                leaf_of[suffix as usize - 1] = id;
            }
            push_children(&mut stack, &trie, t, depth, id, None);
        } else {
            push_children(&mut stack, &trie, t, depth, parent, Some(first));
        }
    }
    // reps are only meaningful for leaves after the pass above; lift one up
    for v in (1..nodes.len()).rev() {
        let (parent, rep) = (nodes[v].parent as usize, nodes[v].rep);
        if parent != 0 && nodes[parent].rep == 0 {
            nodes[parent].rep = rep;
        }
    }
    Ok(OpSuffixTree::from_parts(nodes, leaf_of, s.sigma()))
}
