# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import logging
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from . import kernels, geometry, sobolev
from .fitting import fitPowerLaw
from .state import State
from .exceptions import ValidationError, FitError, DegenerateSubspaceError, TruncationWarning

LOGGER = logging.getLogger( __name__ )

# Geometric default schedule 2^-3 .. 2^-8
DEFAULT_EPS = tuple( 2.0 ** -k for k in range( 3, 9 ) )

# Default schedule of the two dimensional scan, 2^-2 .. 2^-7
DEFAULT_LEVY_EPS = tuple( 2.0 ** -k for k in range( 2, 8 ) )

# Nested grid sizes of the adjacency experiment, 2^k + 1 points, 5 .. 257
DEFAULT_SIZES = tuple( 2 ** k + 1 for k in range( 2, 9 ) )

# Slope shift of the 2T rerun above which a fit is truncation dominated
SLOPE_SHIFT_LIMIT = 0.02

# Required relative growth of the information per doubling of the grid
GROWTH_LIMIT = 0.02

# Columns a fit can use
COLUMNS = ( 'cos', 'mi', 'hs', 'hs_lower', 'hs_upper' )

class ScanConfig( object ):

    """
    Configuration of a two-window scaling scan: windows (t1 - eps, t1 + eps)
    and (t2 - eps, t2 + eps) for every eps of the schedule, each
    discretized by a uniform grid of grid_n points.
    """

    # void
    def __init__( self, H, t1 = 0.0, t2 = 1.0, eps = DEFAULT_EPS, grid_n = 64, T = 64.0, \
                  rtol = geometry.DEFAULT_RTOL, threads = 1 ):

        """
        Configuration of a two-window scaling scan.

        @param H: Hurst index
        @type H: float

        @param t1: Centre of the first window
        @type t1: float

        @param t2: Centre of the second window
        @type t2: float

        @param eps: Strictly decreasing half widths
        @type eps: list<float>

        @param grid_n: Points per window (at least 4)
        @type grid_n: int

        @param T: Truncation of semi-infinite intervals
        @type T: float

        @param rtol: Whitening tolerance
        @type rtol: float

        @param threads: Worker threads for the rows
        @type threads: int
        """

        self.H = kernels.hurstValue( H )
        self.t1, self.t2 = float( t1 ), float( t2 )
        self.eps = [ float( e ) for e in eps ]
        self.grid_n = int( grid_n )
        self.T = float( T )
        self.rtol = float( rtol )
        self.threads = max( 1, int( threads ) )

        self.validate()

    # void
    def validate( self ):

        """
        Check the invariants of the configuration.
        """

        if self.t1 == self.t2:
            raise ValidationError( 't1 and t2 must differ.' )

        if not self.eps or min( self.eps ) <= 0:
            raise ValidationError( 'eps schedule must be a nonempty list of positive values.' )

        if np.any( np.diff( self.eps ) >= 0 ):
            raise ValidationError( 'eps schedule must be strictly decreasing.' )

        if not max( self.eps ) < abs( self.t1 - self.t2 ) / 2.0:
            raise ValidationError( 'windows overlap: max eps must be below |t1 - t2| / 2 = {!r}.'.format( 
                abs( self.t1 - self.t2 ) / 2.0 ) )

        if self.grid_n < 4:
            raise ValidationError( 'grid n must be at least 4 (got {}).'.format( self.grid_n ) )

        if not self.T > 0:
            raise ValidationError( 'T must be positive.' )

    # kernels.IncrementBasis
    def getWindow( self, t, eps ):
        return kernels.IncrementBasis.fromGrid( kernels.TimeGrid( t - eps, t + eps, self.grid_n ) )

    # dict
    def getData( self ):
        return {
            'H': self.H,
            't1': self.t1,
            't2': self.t2,
            'eps': list( self.eps ),
            'n': self.grid_n,
            'T': self.T,
            'rtol': self.rtol
        }

class ScanRow( object ):

    """
    One row of a scan: the abscissa (eps or a grid size), the canonical
    spectrum and the mutual information of the two subspaces.
    """

    # void
    def __init__( self, x, spec = None, mi = None, sizeA = 0, sizeB = 0, state = None ):

        """
        One row of a scan.

        @param x: Abscissa of the row
        @type x: float

        @param spec: Canonical spectrum, None for an aborted row
        @type spec: geometry.CanonicalSpectrum

        @param mi: Mutual information
        @type mi: geometry.MiResult

        @param sizeA: Dimension of the first basis
        @type sizeA: int

        @param sizeB: Dimension of the second basis
        @type sizeB: int

        @param state: Quality state of the row
        @type state: state.State
        """

        self.x = x
        self.spec = spec
        self.mi = mi
        self.sizeA = int( sizeA )
        self.sizeB = int( sizeB )
        self.state = state or State()

        if spec is not None:
            self.state.update( spec.getState() )

    @property
    def eps( self ):
        return self.x

    # float
    def getValue( self, column ):

        """
        Returns a column value of the row; None when the row was aborted or
        the value is infinite.

        @param column: One of cos, mi, hs, hs_lower, hs_upper
        @type column: str

        @rtype: float
        """

        if self.spec is None:
            return None

        if column == 'cos':
            return geometry.cosAngle( self.spec )

        if column == 'hs':
            return geometry.hilbertSchmidtNorm( self.spec )

        if column == 'mi':
            return self.mi.value

        if column == 'hs_lower':
            return self.mi.lower

        if column == 'hs_upper':
            return self.mi.upper

        raise ValidationError( 'unknown column {!r}, use one of {}.'.format( column, ', '.join( COLUMNS ) ) )

    # bool
    def isInfinite( self, column = 'mi' ):
        return self.mi is not None and self.mi.isInfinite() and column in ( 'mi', 'hs_upper' )

    # dict
    def getData( self ):

        """
        Returns the row as a flat dictionary. An infinite information is
        the string 'inf'.

        @rtype: dict
        """

        infinite = 'inf' if self.isInfinite() else None
        return {
            'cos': self.getValue( 'cos' ),
            'mi': infinite or self.getValue( 'mi' ),
            'hs_norm': self.getValue( 'hs' ),
            'hs_lower': self.getValue( 'hs_lower' ),
            'hs_upper': infinite or self.getValue( 'hs_upper' ),
            'rank_a': self.spec.rankA if self.spec is not None else None,
            'rank_b': self.spec.rankB if self.spec is not None else None,
            'size_a': self.sizeA,
            'size_b': self.sizeB,
            'cond': self.spec.cond if self.spec is not None else None,
            'ill_conditioned': self.state.isIllConditioned(),
            'truncated': self.state.isTruncated(),
            'skipped': self.state.isSkipped()
        }

class ScanTable( object ):

    """
    Rows of a scan, sorted by the abscissa (eps descending by default).
    """

    # void
    def __init__( self, rows, key = 'eps', descending = True ):
        self.key = key
        self.rows = sorted( rows, key = lambda row: row.x, reverse = descending )

    # list<ScanRow>
    def getRows( self ):
        return self.rows

    # np.ndarray
    def getColumn( self, column ):

        """
        Returns a column as an array, nan for missing values.

        @rtype: np.ndarray
        """

        if column == self.key:
            return np.array([ row.x for row in self.rows ], dtype = float )

        values = [ row.getValue( column ) for row in self.rows ]
        return np.array([ np.nan if v is None else v for v in values ], dtype = float )

    # State
    def getState( self ):
        state = State()
        for row in self.rows:
            state.update( row.state )

        return state

    # list<dict>
    def getRecords( self ):
        records = []
        for row in self.rows:
            record = { self.key: row.x }
            record.update( row.getData() )
            records.append( record )

        return records

    # int
    def __len__( self ):
        return len( self.rows )

    # iterator
    def __iter__( self ):
        return iter( self.rows )

class Report( object ):

    """
    Result of an experiment: its configuration, an optional table, the
    exponent fits, scalar values and a quality state.
    """

    # void
    def __init__( self, name, config, table = None, fits = None, values = None, state = None ):

        """
        Result of an experiment.

        @param name: Experiment (command) name
        @type name: str

        @param config: Parameters of the run
        @type config: dict

        @param table: Scan table
        @type table: lab.ScanTable

        @param fits: name -> ExponentFit
        @type fits: dict

        @param values: name -> scalar
        @type values: dict

        @param state: Quality state
        @type state: state.State
        """

        self.name = name
        self.config = dict( config )
        self.table = table
        self.fits = dict( fits or {} )
        self.values = dict( values or {} )
        self.state = state or State()

        if table is not None:
            self.state.update( table.getState() )

        for fit in self.fits.values():
            self.state.update( fit.state )

    # fitting.ExponentFit
    def getFit( self, name ):
        return self.fits.get( name )

    # object
    def getValue( self, name ):
        return self.values.get( name )

    # dict
    def getData( self ):

        """
        Returns the report as a serializable dictionary.

        @rtype: dict
        """

        return {
            'name': self.name,
            'config': self.config,
            'fits': { key: fit.getData() for key, fit in self.fits.items() },
            'values': self.values,
            'state': { k: v for k, v in self.state.getState().items() \
                if k not in ( 'required', 'error' ) },
            'rows': self.table.getRecords() if self.table is not None else []
        }

# list
def _runRows( tasks, threads = 1 ):

    """
    Runs independent row tasks, sequentially or on a thread pool. Results
    are collected by task index.
    """

    if threads <= 1 or len( tasks ) <= 1:
        return [ task() for task in tasks ]

    with ThreadPoolExecutor( max_workers = threads ) as executor:
        futures = [ executor.submit( task ) for task in tasks ]
        return [ future.result() for future in futures ]

# ScanRow
def _row( x, GA, GB, C, rtol, min_rank ):

    """
    Computes one row from the Gram matrices. The row is aborted (skipped)
    when an effective rank falls below min_rank.
    """

    started = time.time()
    sizeA, sizeB = len( GA ), len( GB )

    try:
        spec = geometry.canonicalCorrelations( GA, GB, C, rtol )

    except DegenerateSubspaceError as e:
        LOGGER.warning( 'row %r skipped: %s', x, e )
        return ScanRow( x, sizeA = sizeA, sizeB = sizeB, state = State( skipped = True, message = str( e ) ) )

    state = State()
    if min( spec.rankA, spec.rankB ) < min_rank:
        state.setSkipped()
        state.setMessage( 'effective rank {}/{} below {}'.format( 
            min( spec.rankA, spec.rankB ), max( sizeA, sizeB ), min_rank ) )
        LOGGER.warning( 'row %r skipped: %s', x, state.getMessage() )

    row = ScanRow( x, spec, geometry.mutualInformationGy( spec ), sizeA, sizeB, state )
    LOGGER.debug( 'row %r: ranks %d/%d, %d/%d, cos %.6e in %.3fs', x, spec.rankA, sizeA, 
        spec.rankB, sizeB, geometry.cosAngle( spec ), time.time() - started )

    return row

# ScanRow
def _basisRow( x, basisA, basisB, H, rtol, min_rank ):
    return _row( x, kernels.gram( basisA, H ), kernels.gram( basisB, H ), 
        kernels.crossGram( basisA, basisB, H ), rtol, min_rank )

# ScanTable
def localIndependenceScan( cfg ):

    """
    For every eps of the schedule computes the canonical spectrum and the
    mutual information of the increments in the windows around t1 and t2.

    @param cfg: Scan configuration
    @type cfg: lab.ScanConfig

    @rtype: lab.ScanTable
    """

    LOGGER.info( 'local independence scan at H=%r, t1=%r, t2=%r, %d rows', 
        cfg.H, cfg.t1, cfg.t2, len( cfg.eps ) )

    tasks = [ 
        ( lambda eps = eps: _basisRow( eps, cfg.getWindow( cfg.t1, eps ), 
            cfg.getWindow( cfg.t2, eps ), cfg.H, cfg.rtol, cfg.grid_n / 2.0 ) ) 
        for eps in cfg.eps 
    ]

    return ScanTable( _runRows( tasks, cfg.threads ) )

# ExponentFit
def fitExponent( table, column, theory, correction_order = None, drop_largest = True, min_rows = 4 ):

    """
    Log-log fit of a column against the abscissa. The largest abscissa is
    dropped (pre-asymptotic) and so are the ill-conditioned rows; aborted
    rows and infinite values in the fit range are rejected.

    @param table: Scan table
    @type table: lab.ScanTable

    @param column: Column name (cos, mi, hs)
    @type column: str

    @param theory: Theoretical slope
    @type theory: float

    @param correction_order: Expected relative order of the correction
    @type correction_order: float

    @param drop_largest: Drop the row of the largest abscissa
    @type drop_largest: bool

    @param min_rows: Minimal number of rows in the fit
    @type min_rows: int

    @rtype: fitting.ExponentFit
    """

    if column not in COLUMNS:
        raise ValidationError( 'unknown column {!r}, use one of {}.'.format( column, ', '.join( COLUMNS ) ) )

    rows = sorted( table.getRows(), key = lambda row: row.x, reverse = True )
    if drop_largest:
        rows = rows[1:]

    for row in rows:
        if row.state.isSkipped() or row.spec is None:
            raise FitError( 'row {!r} was aborted and lies in the fit range.'.format( row.x ) )

        if row.isInfinite( column ):
            raise FitError( 'row {!r} has infinite {} and lies in the fit range.'.format( row.x, column ) )

    usable = [ row for row in rows if not row.state.isFlagged() ]
    if len( usable ) < min_rows:
        raise FitError( 'fit needs at least {} unflagged rows (got {}).'.format( min_rows, len( usable ) ) )

    return fitPowerLaw( 
        [ row.x for row in usable ], 
        [ row.getValue( column ) for row in usable ], 
        theory = theory, 
        correction_order = correction_order, 
        min_points = min_rows 
    )

# ScanRow
def _smallestStable( table ):
    rows = [ row for row in table.getRows() if row.spec is not None \
        and not row.state.isFlagged() and not row.isInfinite() ]
    return min( rows, key = lambda row: row.x ) if rows else None

# Report
def angleRateCheck( H, t1 = 0.0, t2 = 1.0, eps = DEFAULT_EPS, grid_n = 64, \
                    rtol = geometry.DEFAULT_RTOL, threads = 1 ):

    """
    Rates of the two-window asymptotics: cos ~ C (eps/D)^(2 - 2H) and
    I ~ C^2 / 2 (eps/D)^(4 - 4H) with D = |t1 - t2|. The prefactor is
    extrapolated at the smallest stable eps and compared with the leading
    constant of the discretized windows. It is also compared with the
    full-line spectral constant r_H: the relative gap is reported and the
    ratio to the bound C <= 2^(2 - 2H) r_H / a_H is checked.

    @param H: Hurst index
    @type H: float

    @rtype: lab.Report
    """

    cfg = ScanConfig( H, t1, t2, eps, grid_n, rtol = rtol, threads = threads )
    H = cfg.H
    table = localIndependenceScan( cfg )
    state = State()

    fits, values = {}, {}
    if H == 0.5:
        state.setMessage( 'rates are not fitted at H = 1/2' )
        return Report( 'thm21', cfg.getData(), table, fits, values, state )

    delta = min( 1.0, 2.0 - 2.0 * H )
    fits['cos'] = fitExponent( table, 'cos', 2.0 - 2.0 * H, correction_order = delta )
    fits['mi'] = fitExponent( table, 'mi', 4.0 - 4.0 * H, correction_order = delta )

    values['r_h_spectral'] = sobolev.rHSpectral( H )
    values['a_h'] = sobolev.aHConstant( H )
    values['constant_bound'] = 2.0 ** ( 2.0 - 2.0 * H ) * values['r_h_spectral'] / values['a_h']

    row = _smallestStable( table )
    if abs( 2.0 * H - 1.0 ) < 0.1 or row is None:
        state.setMessage( 'constant comparison needs |2H - 1| >= 0.1 and a stable row' )
        return Report( 'thm21', cfg.getData(), table, fits, values, state )

    distance = abs( cfg.t1 - cfg.t2 )
    cos, mi = row.getValue( 'cos' ), row.getValue( 'mi' )

    values['eps_extrapolation'] = row.x
    values['r_h_extrapolated'] = cos * ( row.x / distance ) ** ( 2.0 * H - 2.0 )
    values['leading_constant'] = sobolev.leadingConstant( H, cfg.grid_n - 1 )
    values['constant_gap'] = abs( values['r_h_extrapolated'] - values['leading_constant'] ) \
        / values['leading_constant']
    values['spectral_gap'] = abs( values['r_h_extrapolated'] - values['r_h_spectral'] ) \
        / values['r_h_spectral']
    values['spectral_bound_ratio'] = values['r_h_extrapolated'] / values['constant_bound']
    values['mi_ratio'] = mi / ( 0.5 * cos * cos )
    values['constant_conclusive'] = not any( r.state.isTruncated() for r in table )

    if not values['constant_conclusive']:
        state.setMessage( 'constant comparison inconclusive: whitening truncated the rank' )

    LOGGER.info( 'angle rates at H=%r: slopes %.4f / %.4f, constant %.6f vs %.6f (r_H %.6f)', H, 
        fits['cos'].slope, fits['mi'].slope, values['r_h_extrapolated'], values['leading_constant'], 
        values['r_h_spectral'] )

    return Report( 'thm21', cfg.getData(), table, fits, values, state )

# kernels.IncrementBasis
def _gradedBasis( a, b, cells, toward, depth ):
    return kernels.IncrementBasis.fromPoints( kernels.gradedGrid( a, b, cells, toward, depth ) )

# ScanTable
def _fixedBasisScan( basis, t, eps, grid_n, H, rtol, threads ):

    """
    Scan of the window (t - eps, t + eps) against a fixed basis.
    """

    tasks = [ 
        ( lambda e = e: _basisRow( e, basis, kernels.IncrementBasis.fromGrid( 
            kernels.TimeGrid( t - e, t + e, grid_n ) ), H, rtol, grid_n / 2.0 ) ) 
        for e in eps 
    ]

    return ScanTable( _runRows( tasks, threads ) )

# float
def _slopeShift( fits, rerun ):
    return max( abs( fits[key].slope - rerun[key].slope ) for key in fits )

# void
def _flagTruncation( state, shift, what ):
    if shift > SLOPE_SHIFT_LIMIT:
        state.setTruncationDominated()
        state.setMessage( 'doubling T shifts the {} slope by {:.4f}'.format( what, shift ) )
        warnings.warn( '{} fit is truncation dominated (slope shift {:.4f} at 2T)'.format( what, shift ), 
            TruncationWarning, stacklevel = 3 )

# Report
def pastRateCheck( H, t = 1.0, T = 64.0, eps = DEFAULT_EPS, grid_n = 64, past_cells = 48, \
                   depth = 2.0 ** -16, rtol = geometry.DEFAULT_RTOL, threads = 1 ):

    """
    Rates of the past-window asymptotics: the increments of the truncated
    past (-T, 0), on a grid graded toward 0, against the window
    (t - eps, t + eps). cos ~ (eps/t)^(1 - H) and I ~ (eps/t)^(2 - 2H).
    The scan is rerun at 2T with the same finest cell.

    @param H: Hurst index
    @type H: float

    @param t: Window centre, t > 0
    @type t: float

    @param T: Truncation of the past, T >= 16 t
    @type T: float

    @param past_cells: Cells of the past grid
    @type past_cells: int

    @param depth: Relative length of the finest past cell
    @type depth: float

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    t, T = float( t ), float( T )
    eps = [ float( e ) for e in eps ]

    if not t > 0 or T < 16.0 * t:
        raise ValidationError( 'past check needs t > 0 and T >= 16 t (got t={!r}, T={!r}).'.format( t, T ) )

    if not eps or np.any( np.diff( eps ) >= 0 ) or min( eps ) <= 0:
        raise ValidationError( 'eps schedule must be positive and strictly decreasing.' )

    if not t - max( eps ) > 0:
        raise ValidationError( 'window (t - eps, t + eps) must not reach the past: max eps < t.' )

    if int( grid_n ) < 4:
        raise ValidationError( 'grid n must be at least 4.' )

    config = { 'H': H, 't': t, 'T': T, 'eps': eps, 'n': int( grid_n ), 'past_cells': int( past_cells ), 
               'depth': depth, 'rtol': rtol }

    LOGGER.info( 'past rate check at H=%r, t=%r, T=%r', H, t, T )
    table = _fixedBasisScan( _gradedBasis( -T, 0.0, past_cells, 0.0, depth ), t, eps, 
        int( grid_n ), H, rtol, threads )

    state = State()
    if H == 0.5:
        state.setMessage( 'rates are not fitted at H = 1/2' )
        return Report( 'thm22', config, table, state = state )

    fits = {
        'cos': fitExponent( table, 'cos', 1.0 - H, correction_order = 1.0 ),
        'mi': fitExponent( table, 'mi', 2.0 - 2.0 * H, correction_order = 1.0 )
    }

    rerunTable = _fixedBasisScan( _gradedBasis( -2.0 * T, 0.0, past_cells, 0.0, depth / 2.0 ), t, eps, 
        int( grid_n ), H, rtol, threads )
    rerun = {
        'cos': fitExponent( rerunTable, 'cos', 1.0 - H ),
        'mi': fitExponent( rerunTable, 'mi', 2.0 - 2.0 * H )
    }

    shift = _slopeShift( fits, rerun )
    _flagTruncation( state, shift, 'past rate' )

    return Report( 'thm22', config, table, fits, { 'slope_shift_2T': shift }, state )

# kernels.IncrementBasis
def _adjacentBases( eps, n ):
    return kernels.IncrementBasis.fromGrid( kernels.TimeGrid( -eps, 0.0, n ) ), \
        kernels.IncrementBasis.fromGrid( kernels.TimeGrid( 0.0, eps, n ) )

# bool
def _nested( sizes ):
    return bool( all( ( b - 1 ) % ( a - 1 ) == 0 for a, b in zip( sizes[:-1], sizes[1:] ) ) )

# bool
def _nondecreasing( values ):
    for a, b in zip( values[:-1], values[1:] ):
        slack = 1e-9 * max( 1.0, a ) if np.isfinite( a ) else 0.0
        if b < a - slack:
            return False

    return True

# list<float>
def _growth( values ):
    return [ ( b - a ) / a if a > 0 else 0.0 for a, b in zip( values[:-1], values[1:] ) ]

# Report
def adjacencyDivergence( H, eps = 1.0, sizes = DEFAULT_SIZES, rtol = geometry.DEFAULT_RTOL, \
                         threads = 1, check_invariance = True ):

    """
    Information between the adjacent intervals (-eps, 0) and (0, eps) on
    grids of growing size. For H != 1/2 the true value is infinite; the
    finite sections must grow by at least 2% per step with no plateau.
    When every grid refines the previous one (n_next - 1 a multiple of
    n - 1) the spans are nested and the sequence is nondecreasing.
    By self-similarity the sequence does not depend on eps, which is
    checked by a rerun at eps / 4.

    @param H: Hurst index
    @type H: float

    @param eps: Interval length
    @type eps: float

    @param sizes: Increasing grid sizes (points per interval)
    @type sizes: list<int>

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    eps = float( eps )
    sizes = [ int( n ) for n in sizes ]

    if not eps > 0:
        raise ValidationError( 'eps must be positive.' )

    if len( sizes ) < 2 or min( sizes ) < 2 or np.any( np.diff( sizes ) <= 0 ):
        raise ValidationError( 'grid sizes must be strictly increasing and at least 2.' )

    def scan( e ):
        tasks = [ ( lambda n = n: _basisRow( n, *_adjacentBases( e, n ), H = H, rtol = rtol, 
            min_rank = 1 ) ) for n in sizes ]
        return ScanTable( _runRows( tasks, threads ), key = 'n', descending = False )

    LOGGER.info( 'adjacency divergence at H=%r over %d grids', H, len( sizes ) )
    table = scan( eps )

    mi = [ float( 'inf' ) if row.isInfinite() else row.getValue( 'mi' ) for row in table ]
    growth = _growth( mi )

    values = {
        'mi': mi,
        'growth': growth,
        'increasing': bool( all( g >= GROWTH_LIMIT for g in growth ) ),
        'nested': _nested( sizes ),
        'nondecreasing': _nondecreasing( mi )
    }

    if check_invariance:
        other = scan( eps / 4.0 )
        difference = max( abs( a.getValue( 'mi' ) - b.getValue( 'mi' ) ) for a, b in zip( table, other ) )
        values['eps_difference'] = difference
        values['eps_invariant'] = bool( difference <= 1e-9 )

    state = State()
    if H != 0.5 and not values['increasing']:
        state.setMessage( 'information growth below {:.0%} per step'.format( GROWTH_LIMIT ) )

    return Report( 'adjacency', { 'H': H, 'eps': eps, 'sizes': sizes, 'rtol': rtol }, 
        table, values = values, state = state )

# tuple<kernels.IncrementBasis,kernels.IncrementBasis>
def _pastFutureBases( T, n, depth ):
    return _gradedBasis( -T, 0.0, n, 0.0, depth ), _gradedBasis( 0.0, T, n, 0.0, depth )

# float
def pastFutureAngle( H, T = 16.0, n = 128, depth = 2.0 ** -20, rtol = geometry.DEFAULT_RTOL ):

    """
    Cosine of the angle between the increments of (-T, 0) and (0, T) on
    grids graded toward 0.

    @param H: Hurst index
    @type H: float

    @param T: Truncation
    @type T: float

    @param n: Cells per side
    @type n: int

    @param depth: Relative length of the finest cell
    @type depth: float

    @rtype: float
    """

    H = kernels.hurstValue( H )
    if not T > 0 or int( n ) < 2:
        raise ValidationError( 'past-future angle needs T > 0 and n >= 2.' )

    past, future = _pastFutureBases( float( T ), int( n ), depth )
    spec, _ = geometry.subspaceInformation( past, future, H, rtol )

    cos = geometry.cosAngle( spec )
    LOGGER.debug( 'past-future cos at H=%r, T=%r, n=%d: %.12f', H, T, n, cos )
    return cos

# Report
def pastFutureStability( H, T = 16.0, n = 128, depth = 2.0 ** -20, rtol = geometry.DEFAULT_RTOL, \
                         tolerance = 0.01, threads = 1 ):

    """
    Past-future angle at (T, n), (T, 2n) and (2T, n), with the relative
    drifts and the margin 1 - cos.

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    runs = [ ( T, n ), ( T, 2 * n ), ( 2.0 * T, n ) ]
    tasks = [ ( lambda T = T, n = n: pastFutureAngle( H, T, n, depth, rtol ) ) for T, n in runs ]
    base, refined, extended = _runRows( tasks, threads )

    def drift( value ):
        return abs( value - base ) / base if base > 0 else abs( value - base )

    values = {
        'cos': base,
        'cos_2n': refined,
        'cos_2T': extended,
        'drift_n': drift( refined ),
        'drift_T': drift( extended ),
        'margin': 1.0 - base
    }

    state = State()
    if max( values['drift_n'], values['drift_T'] ) > tolerance:
        state.setTruncationDominated()
        state.setMessage( 'past-future angle drifts by {:.2%}'.format( 
            max( values['drift_n'], values['drift_T'] ) ) )
        warnings.warn( state.getMessage(), TruncationWarning, stacklevel = 2 )

    return Report( 'pastfuture', { 'H': H, 'T': T, 'n': n, 'depth': depth, 'rtol': rtol }, 
        values = values, state = state )

# Report
def complementWindowScan( H, t1 = 0.0, t = 0.5, t2 = 1.0, eps = DEFAULT_EPS, T = 16.0, grid_n = 64, \
                          cells = 48, depth = 2.0 ** -16, rtol = geometry.DEFAULT_RTOL, threads = 1 ):

    """
    Information between the window (t - eps, t + eps) and the union of the
    truncated complements (-T, t1) and (t2, T), each graded toward its
    inner end. The Hilbert-Schmidt norm is fitted against 1 - H and the
    information against 2 - 2H; the scan is rerun at 2T.

    @param H: Hurst index
    @type H: float

    @param t1: Inner end of the left complement
    @type t1: float

    @param t: Window centre, t1 < t < t2
    @type t: float

    @param t2: Inner end of the right complement
    @type t2: float

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    t1, t, t2, T = float( t1 ), float( t ), float( t2 ), float( T )
    eps = [ float( e ) for e in eps ]

    if not eps or np.any( np.diff( eps ) >= 0 ) or min( eps ) <= 0:
        raise ValidationError( 'eps schedule must be positive and strictly decreasing.' )

    if not ( t1 < t - max( eps ) and t + max( eps ) < t2 ):
        raise ValidationError( 'windows must lie strictly inside (t1, t2).' )

    if not ( -T < t1 and t2 < T ):
        raise ValidationError( 'truncation must satisfy -T < t1 and t2 < T.' )

    def complement( T, depth ):
        return _gradedBasis( -T, t1, cells, t1, depth ).union( _gradedBasis( t2, T, cells, t2, depth ) )

    config = { 'H': H, 't1': t1, 't': t, 't2': t2, 'eps': eps, 'T': T, 'n': int( grid_n ), 
               'cells': int( cells ), 'depth': depth, 'rtol': rtol }

    LOGGER.info( 'complement scan at H=%r, t=%r in (%r, %r)', H, t, t1, t2 )
    table = _fixedBasisScan( complement( T, depth ), t, eps, int( grid_n ), H, rtol, threads )

    state = State()
    if H == 0.5:
        state.setMessage( 'rates are not fitted at H = 1/2' )
        return Report( 'complement', config, table, state = state )

    fits = {
        'hs': fitExponent( table, 'hs', 1.0 - H, correction_order = 1.0 ),
        'mi': fitExponent( table, 'mi', 2.0 - 2.0 * H, correction_order = 1.0 )
    }

    # same finest cells at 2T
    scale = ( T - t2 ) / ( 2.0 * T - t2 )
    rerunTable = _fixedBasisScan( complement( 2.0 * T, depth * scale ), t, eps, int( grid_n ), H, 
        rtol, threads )
    rerun = {
        'hs': fitExponent( rerunTable, 'hs', 1.0 - H ),
        'mi': fitExponent( rerunTable, 'mi', 2.0 - 2.0 * H )
    }

    shift = _slopeShift( fits, rerun )
    _flagTruncation( state, shift, 'complement' )

    return Report( 'complement', config, table, fits, { 'slope_shift_2T': shift }, state )

# np.ndarray
def ballLattice( grid ):

    """
    Offsets (i, j) / r of a square lattice of grid points per axis,
    r = (grid - 1) / 2, strictly inside the unit disc, centre excluded.

    @param grid: Lattice points per axis (odd, at least 3)
    @type grid: int

    @rtype: np.ndarray
    """

    grid = int( grid )
    if grid < 3 or grid % 2 == 0:
        raise ValidationError( 'grid per axis must be odd and at least 3 (got {}).'.format( grid ) )

    r = ( grid - 1 ) // 2
    i, j = np.meshgrid( np.arange( -r, r + 1 ), np.arange( -r, r + 1 ), indexing = 'ij' )
    inside = ( i ** 2 + j ** 2 < r ** 2 ) & ( ( i != 0 ) | ( j != 0 ) )

    offsets = np.column_stack([ i[inside], j[inside] ]).astype( float ) / r
    if len( offsets ) < 8:
        raise ValidationError( 'lattice too coarse: {} points inside the ball, at least 8 needed.'.format( 
            len( offsets ) ) )

    return offsets

# ScanRow
def _levyRow( eps, c1, c2, offsets, H, rtol ):
    pointsA = c1 + eps * offsets
    pointsB = c2 + eps * offsets

    return _row( 
        eps, 
        kernels.levyGram( pointsA, c1, H ), 
        kernels.levyGram( pointsB, c2, H ), 
        kernels.levyCrossGram( pointsA, c1, pointsB, c2, H ), 
        rtol, 
        len( offsets ) / 2.0 
    )

# Report
def levyBallScan( H, c1 = ( 0.0, 0.0 ), c2 = ( 1.0, 0.0 ), eps = DEFAULT_LEVY_EPS, grid = 9, \
                  rtol = geometry.DEFAULT_RTOL, threads = 1 ):

    """
    Angle between the increments X_p - X_c of a two dimensional Levy
    fractional Brownian motion over the lattice points p of the balls
    B(c1, eps) and B(c2, eps). cos ~ eps^(2 - 2H) on both sides.

    @param H: Hurst index
    @type H: float

    @param c1: First centre
    @type c1: tuple<float,float>

    @param c2: Second centre
    @type c2: tuple<float,float>

    @param grid: Lattice points per axis
    @type grid: int

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    c1 = np.asarray( c1, dtype = float ).ravel()
    c2 = np.asarray( c2, dtype = float ).ravel()
    eps = [ float( e ) for e in eps ]

    if c1.shape != ( 2, ) or c2.shape != ( 2, ):
        raise ValidationError( 'centres must be two dimensional points.' )

    if not eps or np.any( np.diff( eps ) >= 0 ) or min( eps ) <= 0:
        raise ValidationError( 'eps schedule must be positive and strictly decreasing.' )

    if not 2.0 * max( eps ) < np.linalg.norm( c1 - c2 ):
        raise ValidationError( 'balls overlap: max eps must be below |c1 - c2| / 2.' )

    offsets = ballLattice( grid )
    tasks = [ ( lambda e = e: _levyRow( e, c1, c2, offsets, H, rtol ) ) for e in eps ]
    table = ScanTable( _runRows( tasks, threads ) )

    fits = { 'cos': fitExponent( table, 'cos', 2.0 - 2.0 * H, correction_order = 1.0 ) }
    config = { 'H': H, 'c1': c1.tolist(), 'c2': c2.tolist(), 'eps': eps, 'grid': int( grid ), 
               'points': len( offsets ), 'rtol': rtol }

    return Report( 'levy2d', config, table, fits )

# Report
def halflineDivergence( H, eps = 1.0, Ts = ( 4.0, 8.0, 16.0, 32.0, 64.0, 128.0 ), cells_per_octave = 4, \
                        rtol = geometry.DEFAULT_RTOL, threads = 1 ):

    """
    Information between (-T, -eps) and (eps, T) for growing T. The points
    are +-eps 2^(j / cells_per_octave), so the grids are nested and the
    sequence is nondecreasing; for H != 1/2 it grows without bound.

    @param H: Hurst index
    @type H: float

    @param eps: Half gap
    @type eps: float

    @param Ts: Increasing truncations, each above eps
    @type Ts: list<float>

    @rtype: lab.Report
    """

    H = kernels.hurstValue( H )
    eps = float( eps )
    Ts = [ float( T ) for T in Ts ]
    cells_per_octave = int( cells_per_octave )

    if not eps > 0 or cells_per_octave < 1:
        raise ValidationError( 'half gap must be positive and cells per octave at least 1.' )

    if len( Ts ) < 2 or min( Ts ) <= 2.0 * eps or np.any( np.diff( Ts ) <= 0 ):
        raise ValidationError( 'truncations must be strictly increasing and above 2 eps.' )

    def bases( T ):
        m = int( np.ceil( np.log2( T / eps ) * cells_per_octave - 1e-9 ) )
        points = eps * 2.0 ** ( np.arange( m + 1 ) / float( cells_per_octave ) )
        return kernels.IncrementBasis.fromPoints( -points[::-1] ), kernels.IncrementBasis.fromPoints( points )

    tasks = [ ( lambda T = T: _basisRow( T, *bases( T ), H = H, rtol = rtol, min_rank = 1 ) ) for T in Ts ]
    table = ScanTable( _runRows( tasks, threads ), key = 'T', descending = False )

    mi = [ float( 'inf' ) if row.isInfinite() else row.getValue( 'mi' ) for row in table ]
    growth = _growth( mi )
    values = {
        'mi': mi,
        'growth': growth,
        'nondecreasing': _nondecreasing( mi ),
        'increasing': bool( all( g > 0 for g in growth ) )
    }

    return Report( 'halfline', { 'H': H, 'eps': eps, 'T': Ts, 'cells_per_octave': cells_per_octave, 
        'rtol': rtol }, table, values = values )
