//! A small min-cost max-flow solver (successive shortest augmenting paths
//! with an SPFA relaxation). Instances here are tiny: one node per voter and
//! committee member plus terminals, so simplicity beats asymptotics.

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: i64,
    cost: i64,
    flow: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct EdgeId(usize);

#[derive(Debug, Clone)]
pub(crate) struct MinCostFlow {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            adj: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> EdgeId {
        let id = self.edges.len();
        self.adj[from].push(id);
        self.edges.push(Edge { to, cap, cost, flow: 0 });
        self.adj[to].push(id + 1);
        self.edges.push(Edge { to: from, cap: 0, cost: -cost, flow: 0 });
        EdgeId(id)
    }

    pub fn flow_on(&self, id: EdgeId) -> i64 {
        self.edges[id.0].flow
    }

    /// Sends as much flow as possible from `s` to `t`, cheapest paths first.
    /// Returns (total flow, total cost).
    pub fn run(&mut self, s: usize, t: usize) -> (i64, i64) {
        let n = self.adj.len();
        let mut total_flow = 0;
        let mut total_cost = 0;
        loop {
            // SPFA shortest path by cost over the residual graph.
            let mut dist = vec![i64::MAX; n];
            let mut in_queue = vec![false; n];
            let mut pred: Vec<Option<usize>> = vec![None; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            in_queue[s] = true;
            while let Some(u) = queue.pop_front() {
                in_queue[u] = false;
                for &eid in &self.adj[u] {
                    let e = &self.edges[eid];
                    if e.cap - e.flow > 0 && dist[u] != i64::MAX && dist[u] + e.cost < dist[e.to] {
                        dist[e.to] = dist[u] + e.cost;
                        pred[e.to] = Some(eid);
                        if !in_queue[e.to] {
                            queue.push_back(e.to);
                            in_queue[e.to] = true;
                        }
                    }
                }
            }
            if pred[t].is_none() {
                return (total_flow, total_cost);
            }
            // Bottleneck along the path.
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while let Some(eid) = pred[v] {
                let e = &self.edges[eid];
                bottleneck = bottleneck.min(e.cap - e.flow);
                v = self.edges[eid ^ 1].to;
            }
            let mut v = t;
            while let Some(eid) = pred[v] {
                self.edges[eid].flow += bottleneck;
                self.edges[eid ^ 1].flow -= bottleneck;
                v = self.edges[eid ^ 1].to;
            }
            total_flow += bottleneck;
            total_cost += bottleneck * dist[t];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_the_cheap_path_first() {
        let mut g = MinCostFlow::new(4);
        g.add_edge(0, 1, 1, 1);
        g.add_edge(0, 2, 1, 4);
        let e1 = g.add_edge(1, 3, 1, 1);
        let e2 = g.add_edge(2, 3, 1, 1);
        let (flow, cost) = g.run(0, 3);
        assert_eq!(flow, 2);
        assert_eq!(cost, 7);
        assert_eq!(g.flow_on(e1), 1);
        assert_eq!(g.flow_on(e2), 1);
    }

    #[test]
    fn respects_capacities() {
        let mut g = MinCostFlow::new(3);
        g.add_edge(0, 1, 3, 0);
        g.add_edge(1, 2, 2, 5);
        let (flow, cost) = g.run(0, 2);
        assert_eq!(flow, 2);
        assert_eq!(cost, 10);
    }

    #[test]
    fn negative_costs_via_residuals() {
        // Rerouting through the residual of a used edge must work.
        let mut g = MinCostFlow::new(4);
        g.add_edge(0, 1, 2, 1);
        g.add_edge(1, 3, 1, 1);
        g.add_edge(1, 2, 1, 1);
        g.add_edge(0, 2, 1, 10);
        g.add_edge(2, 3, 2, 1);
        let (flow, cost) = g.run(0, 3);
        assert_eq!(flow, 3);
        assert_eq!(cost, 2 + 3 + 11);
    }
}
