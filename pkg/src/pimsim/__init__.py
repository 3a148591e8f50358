"""
pimsim - exact integer quantum state-vector simulation on a modelled
multi-DPU processing-in-memory system.

Packages:
    - data: shared value types (Gaussian integers, circuit IR, programs, plans)
    - circuit: gate catalog and benchmark generators
    - qasm_frontend: OpenQASM 2.0 subset parser / emitter
    - passes: gate merging, row swapping, quantization, partitioning, packing
    - intstate: exact integer state-vector engine
    - pim_exec: simulated DPU runtime, reconstruction and cost model
    - oracle: double precision reference simulator
    - pipeline: the five scenario versions wired end to end
    - cli: command line surface
    - utils: logging setup and report formatting
"""

__version__ = "0.1.0"
