const NONE: u32 = u32::MAX;

/// Immediate dominators of a flow graph given as an arc list over `0..n`.
/// `idom[root]` and `idom` of unreachable vertices are `None`.
///
/// Lengauer–Tarjan with path compression, written without recursion.
pub(crate) fn immediate_dominators(n: usize, root: usize, arcs: &[(u32, u32)]) -> Vec<Option<usize>> {
    let (succ_start, succ) = csr(n, arcs.iter().map(|&(a, b)| (a, b)));
    let (pred_start, pred) = csr(n, arcs.iter().map(|&(a, b)| (b, a)));

    // Preorder numbering.
    let mut dfn = vec![NONE; n];
    let mut vertex: Vec<u32> = Vec::with_capacity(n);
    let mut parent: Vec<u32> = Vec::with_capacity(n);
    let mut stack: Vec<(u32, u32)> = vec![(root as u32, succ_start[root])];
    dfn[root] = 0;
    vertex.push(root as u32);
    parent.push(NONE);
    while let Some(top) = stack.last_mut() {
        let v = top.0 as usize;
        if top.1 == succ_start[v + 1] {
            stack.pop();
            continue;
        }
        let w = succ[top.1 as usize] as usize;
        top.1 += 1;
        if dfn[w] == NONE {
            dfn[w] = vertex.len() as u32;
            parent.push(dfn[v]);
            vertex.push(w as u32);
            stack.push((w as u32, succ_start[w]));
        }
    }

    let count = vertex.len();
    let mut semi: Vec<u32> = (0..count as u32).collect();
    let mut label: Vec<u32> = (0..count as u32).collect();
    let mut ancestor = vec![NONE; count];
    let mut idom = vec![NONE; count];
    let mut bucket: Vec<Vec<u32>> = vec![Vec::new(); count];
    let mut path: Vec<u32> = Vec::new();

    let mut eval = |v: u32, ancestor: &mut [u32], label: &mut [u32], semi: &[u32]| -> u32 {
        if ancestor[v as usize] == NONE {
            return v;
        }
        let mut x = v;
        while ancestor[ancestor[x as usize] as usize] != NONE {
            path.push(x);
            x = ancestor[x as usize];
        }
        while let Some(y) = path.pop() {
            let a = ancestor[y as usize] as usize;
            if semi[label[a] as usize] < semi[label[y as usize] as usize] {
                label[y as usize] = label[a];
            }
            ancestor[y as usize] = ancestor[a];
        }
        label[v as usize]
    };

    for w in (1..count).rev() {
        let wv = vertex[w] as usize;
        for &pv in &pred[pred_start[wv] as usize..pred_start[wv + 1] as usize] {
            let v = dfn[pv as usize];
            if v == NONE {
                continue;
            }
            let u = eval(v, &mut ancestor, &mut label, &semi);
            if semi[u as usize] < semi[w] {
                semi[w] = semi[u as usize];
            }
        }
        bucket[semi[w] as usize].push(w as u32);
        let p = parent[w];
        ancestor[w] = p;
        for v in std::mem::take(&mut bucket[p as usize]) {
            let u = eval(v, &mut ancestor, &mut label, &semi);
            idom[v as usize] = if semi[u as usize] < semi[v as usize] { u } else { p };
        }
    }
    for w in 1..count {
        if idom[w] != semi[w] {
            idom[w] = idom[idom[w] as usize];
        }
    }

    let mut out = vec![None; n];
    for w in 1..count {
        out[vertex[w] as usize] = Some(vertex[idom[w] as usize] as usize);
    }
    out
}

fn csr(n: usize, arcs: impl Iterator<Item = (u32, u32)> + Clone) -> (Vec<u32>, Vec<u32>) {
    let mut start = vec![0u32; n + 1];
    for (a, _) in arcs.clone() {
        start[a as usize + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut target = vec![0u32; start[n] as usize];
    for (a, b) in arcs {
        target[fill[a as usize] as usize] = b;
        fill[a as usize] += 1;
    }
    (start, target)
}
