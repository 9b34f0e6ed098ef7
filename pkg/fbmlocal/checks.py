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

import time
import logging
import warnings
import numpy as np
from collections import OrderedDict
from . import geometry, kernels, lab, sampler, sobolev
from .exceptions import NumericalError, ValidationError, NumericalQualityWarning

LOGGER = logging.getLogger( __name__ )

# Hurst indices of the two-window rate checks
ANGLE_HURST = ( 0.2, 0.25, 0.7, 0.75, 0.8 )

# Hurst indices of the constant, past-window and complement checks
CONSTANT_HURST = ( 0.25, 0.75 )

# Hurst indices of the pairing identity
PAIRING_HURST = ( 0.25, 0.4, 0.6, 0.75 )

# (alpha, s) pairs of the dual norm decay
DUAL_NORM_PAIRS = ( ( 2.0, 0.25 ), ( 1.5, -0.25 ) )

class Check( object ):

    """
    Result of one acceptance check: measured and expected value with an
    absolute tolerance. A flagged measurement never passes.
    """

    # void
    def __init__( self, family, name, measured, expected, tolerance, message = None, 
            flagged = False ):

        """
        Result of one acceptance check.

        @param family: Family of the check (the command it exercises)
        @type family: str

        @param name: Name of the check
        @type name: str

        @param measured: Measured value, None when it could not be computed
        @type measured: float

        @param expected: Expected value
        @type expected: float

        @param tolerance: Allowed absolute deviation
        @type tolerance: float

        @param message: Diagnostic message
        @type message: str

        @param flagged: The measurement is known to be unreliable
        @type flagged: bool
        """

        self.family = family
        self.name = name
        self.measured = None if measured is None else float( measured )
        self.expected = float( expected )
        self.tolerance = float( tolerance )
        self.message = message
        self.flagged = bool( flagged )
        self.passed = self.measured is not None and not self.flagged \
            and bool( abs( self.measured - self.expected ) <= self.tolerance )

    # dict
    def getData( self ):
        return {
            'family': self.family,
            'name': self.name,
            'measured': self.measured,
            'expected': self.expected,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'flagged': self.flagged,
            'message': self.message
        }

class CheckSuite( object ):

    """
    Ordered list of checks with its configuration.
    """

    # void
    def __init__( self, checks, config = None, elapsed = None ):
        self.checks = list( checks )
        self.config = dict( config or {} )
        self.elapsed = elapsed

    # bool
    def isPassed( self ):
        return all([ c.passed for c in self.checks ])

    # list<Check>
    def getFailed( self ):
        return [ c for c in self.checks if not c.passed ]

    # dict
    def getData( self ):
        return {
            'config': self.config,
            'checks': [ c.getData() for c in self.checks ],
            'passed': self.isPassed(),
            'elapsed': self.elapsed
        }

    # int
    def __len__( self ):
        return len( self.checks )

    # iterator
    def __iter__( self ):
        return iter( self.checks )

# Check
def _failed( family, name, expected, tolerance, error ):
    LOGGER.warning( '%s/%s could not be computed: %s', family, name, error )
    return Check( family, name, None, expected, tolerance, message = str( error ) )

# Check
def _flag( value ):
    return 1.0 if value else 0.0

# list<Check>
def angleRates( threads = 1 ):

    """
    Slopes of cos and MI for the two-window scans, the leading constant,
    the spectral bound on it and the MI / (cos^2 / 2) ratio at the smallest
    stable eps.
    """

    checks = []
    for H in ANGLE_HURST:
        try:
            report = lab.angleRateCheck( H, threads = threads )

        except NumericalError as e:
            checks.append( _failed( 'thm21', 'H={} slope_cos'.format( H ), 2.0 - 2.0 * H, 0.05, e ) )
            continue

        checks.append( Check( 'thm21', 'H={} slope_cos'.format( H ), report.getFit( 'cos' ).slope, 
            2.0 - 2.0 * H, 0.05 ) )
        checks.append( Check( 'thm21', 'H={} slope_mi'.format( H ), report.getFit( 'mi' ).slope, 
            4.0 - 4.0 * H, 0.10 ) )

        if H not in CONSTANT_HURST:
            continue

        leading = report.getValue( 'leading_constant' )
        if leading is None:
            checks.append( _failed( 'thm21', 'H={} constant'.format( H ), 0.0, 0.0, 
                report.state.getMessage() ) )
            continue

        checks.append( Check( 'thm21', 'H={} constant'.format( H ), 
            report.getValue( 'r_h_extrapolated' ), leading, 0.05 * leading ) )
        checks.append( Check( 'thm21', 'H={} spectral bound excess'.format( H ), 
            max( 0.0, report.getValue( 'spectral_bound_ratio' ) - 1.0 ), 0.0, 0.05, 
            message = 'gap to r_H {:.2%}'.format( report.getValue( 'spectral_gap' ) ) ) )
        checks.append( Check( 'thm21', 'H={} mi_ratio'.format( H ), report.getValue( 'mi_ratio' ), 
            1.0, 0.05 ) )

    return checks

# list<Check>
def pastRates( threads = 1 ):

    """
    Slopes of cos and MI of the window against the truncated past and the
    slope shift of the 2T rerun.
    """

    checks = []
    for H in CONSTANT_HURST:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter( 'ignore', NumericalQualityWarning )
                report = lab.pastRateCheck( H, threads = threads )

        except NumericalError as e:
            checks.append( _failed( 'thm22', 'H={} slope_cos'.format( H ), 1.0 - H, 0.05, e ) )
            continue

        checks.append( Check( 'thm22', 'H={} slope_cos'.format( H ), report.getFit( 'cos' ).slope, 
            1.0 - H, 0.05 ) )
        checks.append( Check( 'thm22', 'H={} slope_mi'.format( H ), report.getFit( 'mi' ).slope, 
            2.0 - 2.0 * H, 0.10 ) )
        checks.append( Check( 'thm22', 'H={} slope_shift_2T'.format( H ), 
            report.getValue( 'slope_shift_2T' ), 0.0, lab.SLOPE_SHIFT_LIMIT ) )

    return checks

# list<Check>
def complementRates( threads = 1 ):

    """
    Slopes of the Hilbert-Schmidt norm and the MI of the window against
    its two truncated complements, and the slope shift of the 2T rerun.
    """

    checks = []
    for H in CONSTANT_HURST:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter( 'ignore', NumericalQualityWarning )
                report = lab.complementWindowScan( H, threads = threads )

        except NumericalError as e:
            checks.append( _failed( 'complement', 'H={} slope_hs'.format( H ), 1.0 - H, 0.05, e ) )
            continue

        checks.append( Check( 'complement', 'H={} slope_hs'.format( H ), report.getFit( 'hs' ).slope, 
            1.0 - H, 0.05 ) )
        checks.append( Check( 'complement', 'H={} slope_mi'.format( H ), report.getFit( 'mi' ).slope, 
            2.0 - 2.0 * H, 0.10 ) )
        checks.append( Check( 'complement', 'H={} slope_shift_2T'.format( H ), 
            report.getValue( 'slope_shift_2T' ), 0.0, lab.SLOPE_SHIFT_LIMIT ) )

    return checks

# list<Check>
def brownianExactness( threads = 1 ):

    """
    At H = 1/2 disjoint increments are independent: cos and MI vanish on
    the two-window scan, the past-window scan, the window against its two
    complements and the two half-lines.
    """

    tables = {
        'scan': lab.localIndependenceScan( lab.ScanConfig( 0.5, threads = threads ) ),
        'past': lab.pastRateCheck( 0.5, threads = threads ).table,
        'complement': lab.complementWindowScan( 0.5, threads = threads ).table,
        'halfline': lab.halflineDivergence( 0.5, threads = threads ).table
    }

    checks = []
    for name, table in sorted( tables.items() ):
        for column in ( 'cos', 'mi' ):
            values = table.getColumn( column )
            checks.append( Check( 'brownian', '{} max {}'.format( name, column ), 
                float( np.nanmax( np.abs( values ) ) ), 0.0, 1e-10 ) )

    return checks

# tuple<np.ndarray,np.ndarray,np.ndarray>
def _randomBlocks( rng, dimA, dimB ):
    d = dimA + dimB
    X = rng.standard_normal( ( d, d ) )
    Z = X @ X.T / d + np.eye( d )
    return Z[:dimA, :dimA], Z[dimA:, dimA:], Z[:dimA, dimA:]

# list<Check>
def routeEquivalence( threads = 1, instances = 100, seed = 20140 ):

    """
    Canonical-correlation route against the determinant route of the
    mutual information on random nondegenerate instances up to dimension
    20 (worst relative difference).
    """

    rng = np.random.Generator( np.random.Philox( np.random.SeedSequence( seed ) ) )
    worst = 0.0
    for _ in range( instances ):
        dimA, dimB = rng.integers( 1, 11, size = 2 )
        GA, GB, C = _randomBlocks( rng, int( dimA ), int( dimB ) )

        gy = geometry.mutualInformationGy( geometry.canonicalCorrelations( GA, GB, C ) ).value
        det = geometry.mutualInformationDet( GA, GB, C )
        worst = max( worst, abs( gy - det ) / max( abs( det ), 1e-300 ) )

    return [ Check( 'routes', 'gy vs det relative', worst, 0.0, 1e-8 ) ]

# list<Check>
def boundSandwich( threads = 1, spectra = 1000, seed = 20141 ):

    """
    HS-lower <= MI <= HS-upper on random spectra with sigma_1 <= 0.9 and on
    the rows of a two-window scan. The measured value is the number of
    violations.
    """

    rng = np.random.Generator( np.random.Philox( np.random.SeedSequence( seed ) ) )

    violations = 0
    for _ in range( spectra ):
        sigmas = 0.9 * rng.random( int( rng.integers( 1, 21 ) ) )
        mi = geometry.mutualInformationGy( geometry.CanonicalSpectrum( sigmas, len( sigmas ), len( sigmas ) ) )
        slack = 1e-14 * max( 1.0, mi.value )
        violations += int( not ( mi.lower - slack <= mi.value <= mi.upper + slack ) )

    table = lab.localIndependenceScan( lab.ScanConfig( 0.75, threads = threads ) )
    for row in table:
        if row.spec is None or row.isInfinite():
            continue

        slack = 1e-14 * max( 1.0, row.mi.value )
        violations += int( not ( row.mi.lower - slack <= row.mi.value <= row.mi.upper + slack ) )

    return [ Check( 'sandwich', 'violations', violations, 0.0, 0.0 ) ]

# list<tuple<TestFunction,TestFunction>>
def pairingSuite():

    """
    Fixed suite of ten pairs of test functions: hats and steps, with
    identical, overlapping and disjoint supports.
    """

    TF = sobolev.TestFunction
    return [
        ( TF.hat( 0.0, 1.0 ), TF.hat( 0.0, 1.0 ) ),
        ( TF.hat( 0.0, 1.0 ), TF.hat( 2.0, 3.0 ) ),
        ( TF.hat( 0.0, 2.0 ), TF.hat( 1.0, 3.0 ) ),
        ( TF.hats( 0.0, 1.0, [ 1.0, 2.0, 1.0 ] ), TF.hats( 0.5, 1.5, [ 1.0, -1.0, 1.0 ] ) ),
        ( TF.hats( 0.0, 1.0, [ 1.0, -1.0, 1.0 ] ), TF.hat( 0.0, 1.0 ) ),
        ( TF.hat( -1.0, 1.0 ), TF.hat( 3.0, 5.0 ) ),
        ( TF.steps( 0.0, 1.0, [ 1.0, 2.0 ] ), TF.steps( 1.0, 2.0, [ 1.0, -1.0 ] ) ),
        ( TF.indicator( 0.0, 1.0 ), TF.indicator( 2.0, 3.0 ) ),
        ( TF.indicator( 0.0, 1.0 ), TF.indicator( 0.0, 1.0 ) ),
        ( TF.steps( 0.0, 1.0, [ 1.0, -1.0, 1.0, -1.0 ] ), TF.indicator( 0.5, 1.5, cells = 2 ) )
    ]

# list<Check>
def sobolevIdentities( threads = 1 ):

    """
    Pairing identity on the fixed suite, a_H(1/2) = 1, the dilation rule
    of the Sobolev norm and the decay exponent of the dual norm.
    """

    checks = []
    suite = pairingSuite()
    for H in PAIRING_HURST:
        worst = max([ sobolev.pairingIdentityCheck( phi1, phi2, H ) for phi1, phi2 in suite ])
        checks.append( Check( 'sobolev', 'pairing H={}'.format( H ), worst, 0.0, 1e-3 ) )

    checks.append( Check( 'sobolev', 'a_H(1/2)', sobolev.aHConstant( 0.5 ), 1.0, 0.0 ) )

    phi = sobolev.TestFunction.hats( 0.0, 1.0, [ 1.0, 3.0, 2.0 ] )
    worst = 0.0
    for s in ( -0.25, 0.0, 0.25 ):
        norm = sobolev.sobolevNorm( phi, s ) ** 2
        for k in ( 2.0, 4.0, 8.0 ):
            dilated = sobolev.sobolevNorm( phi.dilate( k ), s ) ** 2
            worst = max( worst, abs( dilated - k ** ( 2.0 * s - 1.0 ) * norm ) / dilated )

    checks.append( Check( 'sobolev', 'dilation rule', worst, 0.0, 1e-6 ) )

    for alpha, s in DUAL_NORM_PAIRS:
        name = 'dual norm alpha={} s={}'.format( alpha, s )
        try:
            with warnings.catch_warnings():
                warnings.simplefilter( 'ignore', NumericalQualityWarning )
                fit = sobolev.dualNormDecayExponent( alpha, s )

            checks.append( Check( 'sobolev', name, fit.slope, fit.theory, 0.05, 
                message = fit.state.getMessage(), flagged = fit.state.isTruncationDominated() ) )

        except NumericalError as e:
            checks.append( _failed( 'sobolev', name, 0.5 + s - alpha, 0.05, e ) )

    return checks

# list<Check>
def adjacency( threads = 1 ):

    """
    Growth of the adjacent-interval information under refinement and its
    eps invariance.
    """

    report = lab.adjacencyDivergence( 0.8, threads = threads )
    return [
        Check( 'adjacency', 'min growth >= {}'.format( lab.GROWTH_LIMIT ), 
            _flag( report.getValue( 'increasing' ) ), 1.0, 0.0 ),
        Check( 'adjacency', 'nested refinement nondecreasing', 
            _flag( report.getValue( 'nested' ) and report.getValue( 'nondecreasing' ) ), 1.0, 0.0 ),
        Check( 'adjacency', 'eps invariance', report.getValue( 'eps_difference' ), 0.0, 1e-9 )
    ]

# list<Check>
def pastFuture( threads = 1 ):

    """
    Past-future angle stays below 1 with small drift under doubling of n
    and T.
    """

    checks = []
    for H in ( 0.2, 0.8 ):
        with warnings.catch_warnings():
            warnings.simplefilter( 'ignore', NumericalQualityWarning )
            report = lab.pastFutureStability( H, threads = threads )

        checks.append( Check( 'pastfuture', 'H={} below 1'.format( H ), 
            _flag( report.getValue( 'cos' ) < 1.0 ), 1.0, 0.0 ) )
        checks.append( Check( 'pastfuture', 'H={} drift 2n'.format( H ), 
            report.getValue( 'drift_n' ), 0.0, 0.01 ) )
        checks.append( Check( 'pastfuture', 'H={} drift 2T'.format( H ), 
            report.getValue( 'drift_T' ), 0.0, 0.01 ) )

    return checks

# list<Check>
def levyRates( threads = 1 ):

    """
    Angle rate between two balls of the two dimensional Levy process.
    """

    checks = []
    for H in CONSTANT_HURST:
        name = 'H={} slope_cos'.format( H )
        try:
            report = lab.levyBallScan( H, threads = threads )
            checks.append( Check( 'levy2d', name, report.getFit( 'cos' ).slope, 2.0 - 2.0 * H, 0.15 ) )

        except NumericalError as e:
            checks.append( _failed( 'levy2d', name, 2.0 - 2.0 * H, 0.15, e ) )

    return checks

# float
def _rowDifference( first, second, columns = ( 'cos', 'mi' ) ):
    worst = 0.0
    for column in columns:
        a, b = first.getColumn( column ), second.getColumn( column )
        worst = max( worst, float( np.max( np.abs( a - b ) / np.maximum( 1.0, np.abs( b ) ) ) ) )

    return worst

# float
def _spectrumDifference( first, second ):
    worst = 0.0
    for a, b in zip( first.getRows(), second.getRows() ):
        if a.spec is None or b.spec is None or len( a.spec ) != len( b.spec ):
            return float( 'inf' )

        if len( a.spec ):
            worst = max( worst, float( np.max( np.abs( a.spec.sigmas - b.spec.sigmas ) ) ) )

    return worst

# list<Check>
def invariance( threads = 1 ):

    """
    Stationarity (translation by 2), self-similarity (scaling by 2) and the
    symmetry of the canonical spectrum, the angle and the information under
    the swap of the subspaces.
    """

    H, eps = 0.75, lab.DEFAULT_EPS[:4]
    base = lab.localIndependenceScan( lab.ScanConfig( H, 0.0, 1.0, eps, threads = threads ) )
    shifted = lab.localIndependenceScan( lab.ScanConfig( H, 2.0, 3.0, eps, threads = threads ) )
    scaled = lab.localIndependenceScan( lab.ScanConfig( H, 0.0, 2.0, [ 2.0 * e for e in eps ], 
        threads = threads ) )
    swapped = lab.localIndependenceScan( lab.ScanConfig( H, 1.0, 0.0, eps, threads = threads ) )

    return [
        Check( 'invariance', 'stationarity', _rowDifference( shifted, base ), 0.0, 1e-10 ),
        Check( 'invariance', 'self-similarity', _rowDifference( scaled, base ), 0.0, 1e-10 ),
        Check( 'invariance', 'swap symmetry', _rowDifference( swapped, base ), 0.0, 1e-10 ),
        Check( 'invariance', 'swap spectrum', _spectrumDifference( swapped, base ), 0.0, 1e-10 )
    ]

# list<Check>
def samplerConsistency( threads = 1, seed = 7 ):

    """
    Lag-1 correlation of sampled increments within 3 standard errors of
    2^(2H-1) - 1 at m n >= 10^6, and the plug-in information against the
    analytic one within the bootstrap spread.
    """

    checks = []
    for H in CONSTANT_HURST:
        paths = sampler.sampleFbmIncrements( 256, 1.0, H, 4000, seed, threads = threads )
        ratio, se = sampler.lag1Correlation( paths )
        checks.append( Check( 'sampler', 'H={} lag-1'.format( H ), ratio, sampler.theoreticalLag1( H ), 
            3.0 * se ) )

    paths = sampler.sampleFbmIncrements( 8, 1.0, 0.75, 100000, seed, threads = threads )
    report = sampler.empiricalMiCheck( paths, 4 )
    checks.append( Check( 'sampler', 'plug-in MI', report.getValue( 'empirical' ), 
        report.getValue( 'analytic' ), 3.0 * report.getValue( 'spread' ) + report.getValue( 'bias' ) ) )

    return checks

# Families of the suite in running order; the keys are the --only names
FAMILIES = OrderedDict([
    ( 'thm21', angleRates ),
    ( 'thm22', pastRates ),
    ( 'complement', complementRates ),
    ( 'brownian', brownianExactness ),
    ( 'routes', routeEquivalence ),
    ( 'sandwich', boundSandwich ),
    ( 'sobolev', sobolevIdentities ),
    ( 'adjacency', adjacency ),
    ( 'pastfuture', pastFuture ),
    ( 'levy2d', levyRates ),
    ( 'invariance', invariance ),
    ( 'sampler', samplerConsistency )
])

# CheckSuite
def checkAll( only = None, threads = 1 ):

    """
    Runs the acceptance suite, or the families named in only.

    @param only: Family names
    @type only: list<str>

    @param threads: Worker threads of the scans
    @type threads: int

    @rtype: checks.CheckSuite
    """

    names = list( only or FAMILIES.keys() )
    unknown = [ name for name in names if name not in FAMILIES ]
    if unknown:
        raise ValidationError( 'unknown check families {}; use some of: {}.'.format( 
            ', '.join( unknown ), ', '.join( FAMILIES.keys() ) ) )

    started = time.time()
    results = []
    for name in names:
        family_started = time.time()
        results += FAMILIES[ name ]( threads = threads )
        LOGGER.info( 'check family %s finished in %.1fs', name, time.time() - family_started )

    return CheckSuite( results, { 'only': names, 'threads': threads }, time.time() - started )
