import numpy as np

from pcm_sparsify.search import RunTrace, greedy, trace_from_csv, trace_to_csv


def test_empty_trace_is_header_only():
    assert trace_to_csv(RunTrace()) == b"elapsed_s,energy,temperature\n"


def test_three_samples_four_lines():
    trace = RunTrace(samples=[(0.0, 34, 4.3), (0.5, 33, 2.15), (1.25, 32, 0.86)])
    lines = trace_to_csv(trace).decode("ascii").splitlines()
    assert len(lines) == 4
    assert lines[1] == "0,34,4.3"
    assert lines[3] == "1.25,32,0.86"


def test_six_significant_digits():
    trace = RunTrace(samples=[(0.123456789, 10, 0.62133001)])
    assert trace_to_csv(trace).decode("ascii").splitlines()[1] == "0.123457,10,0.62133"


def test_csv_reparses_to_trace():
    """Test values with at most six significant digits survive a CSV round trip."""
    trace = RunTrace(samples=[(0.0, 34, 4.29951), (0.000125, 33, 2.15), (12.5, 32, 0.859902)])
    assert trace_from_csv(trace_to_csv(trace)).samples == trace.samples


def test_report_trace_export(h15):
    """Test a search report exports its own trace."""
    result = greedy(h15, rng=np.random.default_rng(0))
    parsed = trace_from_csv(trace_to_csv(result))
    assert parsed.energies() == result.trace.energies()
    assert parsed.energies()[-1] == 32


def test_record_keeps_time_monotone():
    trace = RunTrace()
    trace.record(1.0, 5, 0.1)
    trace.record(0.5, 4, 0.1)
    assert [sample[0] for sample in trace.samples] == [1.0, 1.0]
