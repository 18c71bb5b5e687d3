import pytest

from latticeburgers.base.config import BoundaryMode, Marching
from latticeburgers.base.exceptions import DomainError, InvalidArgumentError
from latticeburgers.experiments.cases import (
    CASE_IDS,
    PUBLISHED_CHI,
    ExperimentSpec,
    Table2Row,
    case_spec,
    reference_box,
    run_case,
)
from latticeburgers.lattice.geometry import bounding_box
from latticeburgers.lattice.grid import LatticeKind


def test_case_ids():
    for case_id in CASE_IDS:
        assert case_spec(case_id, 'f1').case_id == case_id


def test_custom_parameters_are_not_a_case():
    assert ExperimentSpec('exponential', a=0.2, c=0.15).case_id is None
    assert ExperimentSpec('orthogonal', a=0.1, b=0.05).case_id is None
    assert ExperimentSpec('orthogonal', a=0.1, N=9).case_id is None


def test_spec_is_checked():
    with pytest.raises(InvalidArgumentError):
        ExperimentSpec('orthogonal', a=0.1, M=2)
    with pytest.raises(InvalidArgumentError):
        ExperimentSpec('hexagonal', a=0.1)
    with pytest.raises(InvalidArgumentError):
        ExperimentSpec('orthogonal', a=0.1, boundary_mode='reflect')
    with pytest.raises(InvalidArgumentError):
        ExperimentSpec('orthogonal', a=0.1, solution='f3')
    with pytest.raises(InvalidArgumentError):
        ExperimentSpec('orthogonal', a=0.1, marching='diagonal')
    assert ExperimentSpec('exponential', a=0.1).lattice == LatticeKind.exponential


def test_unknown_case():
    with pytest.raises(InvalidArgumentError):
        case_spec(6, 'f1')


def test_case_spec_settings():
    spec = case_spec(4, 'f2', origin=(0.5, 0.2), boundary_mode=BoundaryMode.SHRINK)
    assert (spec.a, spec.c, spec.b) == (0.0375, 0.15, 0.1)
    assert (spec.x0, spec.y0) == (0.5, 0.2)
    assert spec.boundary_mode == BoundaryMode.SHRINK
    assert spec.marching == Marching.COLUMNS
    assert spec.grid().shape == (8, 8)


def test_affine_run_is_exact():
    spec = ExperimentSpec('orthogonal', a=0.1, b=0.004, solution='affine')
    row = run_case(spec)
    assert row.chi <= 1e-12
    assert row.case_id is None
    assert row.reference is None and row.ratio is None
    assert (row.num_sites, row.excluded_sites) == (64, 0)
    assert row.marching == 'columns'


def test_case_run(tmp_path):
    row = run_case(case_spec(2, 'f1', output=str(tmp_path)))
    assert row.case_id == 2
    assert row.reference == PUBLISHED_CHI[('f1', 2)]
    assert row.ratio == pytest.approx(row.chi / row.reference)
    assert not row.interpretation
    assert row.chi >= 0.0
    assert (tmp_path / 'case2_f1_lattice.txt').exists()
    assert (tmp_path / 'case2_f1_field.txt').exists()


def test_shrink_run_compares_fewer_sites():
    row = run_case(case_spec(1, 'f2', boundary_mode=BoundaryMode.SHRINK))
    assert row.num_sites == 8 + 8 + 7 + 7 + 6 + 6 + 5 + 5
    assert row.num_sites + row.excluded_sites == 64

    spec = case_spec(
        1, 'f2', boundary_mode=BoundaryMode.SHRINK, marching=Marching.ROWS
    )
    row = run_case(spec)
    assert (row.num_sites, row.marching) == (8 + 6 + 4 + 2, 'rows')


def test_interpreted_case():
    assert run_case(case_spec(5, 'f2')).interpretation


def test_solution_undefined_on_the_lattice():
    with pytest.raises(DomainError):
        run_case(case_spec(1, 'f2', origin=(0.0, 0.0)))


def test_output_is_reproducible(tmp_path):
    for name in ('first', 'second'):
        run_case(case_spec(3, 'f2', output=str(tmp_path / name)))
    for suffix in ('lattice', 'field'):
        file = f'case3_f2_{suffix}.txt'
        first = (tmp_path / 'first' / file).read_bytes()
        assert first == (tmp_path / 'second' / file).read_bytes()


def test_row_cells():
    row = Table2Row(
        case_id=None,
        solution='f1',
        chi=0.5,
        lattice='orthogonal',
        a=0.1,
        b=0.1,
        c=0.0,
        x0=0.0,
        y0=0.1,
        num_sites=64,
        excluded_sites=0,
    )
    cells = row.cells()
    assert len(cells) == len(Table2Row.HEADER)
    assert cells[0] == 'custom'
    assert cells[-3:-1] == ('columns', None)
    assert cells[-1] == 'no'


@pytest.mark.parametrize('case_id', CASE_IDS)
def test_affine_cases_are_exact(case_id):
    row = run_case(case_spec(case_id, 'affine'))
    assert row.chi <= 1e-12
    assert 0.0 <= row.coverage <= 1.0


def test_coverage_of_the_orthogonal_case():
    spec = case_spec(1, 'f1')
    assert run_case(spec).coverage == pytest.approx(1.0)
    assert reference_box(case_spec(4, 'f1')) == bounding_box(spec.grid())
