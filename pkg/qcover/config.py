default_seed = 0
default_jobs = 1
default_size_gate = 200
default_node_budget = 5_000_000
oracle_max_subspaces = 200_000

sweep_ineq_23_m_range = (3, 10)
sweep_ineq_23_q_max = 128
sweep_chain_m_range = (4, 10)
sweep_chain_q_max = 128
sweep_ineq_10_a_max = 12
sweep_ineq_10_qs = (2, 3, 4, 5, 8)
sweep_ineq_233_m_range = (3, 8)
sweep_ineq_233_q_max = 64
