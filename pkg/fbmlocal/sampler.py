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

import json
import logging
import numpy as np
from concurrent.futures import ThreadPoolExecutor
from scipy import linalg
from . import kernels, geometry
from .lab import Report
from .state import State
from .exceptions import ValidationError, SamplingError

LOGGER = logging.getLogger( __name__ )

# Relative tolerance of negative embedding eigenvalues
EMBEDDING_TOLERANCE = 1e-10

# Doublings of the embedding before the dense fallback
MAX_DOUBLINGS = 12

# Paths generated per random stream
BLOCK_SIZE = 1024

CIRCULANT = 'circulant'
CHOLESKY = 'cholesky'

class SamplePaths( object ):

    """
    m sample paths of n fractional Gaussian noise increments on a grid of
    spacing dt, with the seed and the method that produced them.
    """

    # void
    def __init__( self, data, dt, H, seed, method ):

        """
        Sample paths of increments.

        @param data: m x n matrix of increments
        @type data: np.ndarray

        @param dt: Grid spacing
        @type dt: float

        @param H: Hurst index
        @type H: float

        @param seed: Root seed
        @type seed: int

        @param method: 'circulant' or 'cholesky'
        @type method: str
        """

        self.data = np.atleast_2d( np.asarray( data, dtype = float ) )
        self.dt = float( dt )
        self.H = kernels.hurstValue( H )
        self.seed = seed
        self.method = method

    @property
    def m( self ):
        return self.data.shape[0]

    @property
    def n( self ):
        return self.data.shape[1]

    # np.ndarray
    def getPaths( self ):

        """
        Returns the paths X_0 = 0, X_dt, ..., X_(n dt) as an m x (n + 1)
        matrix.

        @rtype: np.ndarray
        """

        return np.hstack([ np.zeros( ( self.m, 1 ) ), np.cumsum( self.data, axis = 1 ) ])

    # dict
    def getData( self ):
        return {
            'n': self.n,
            'm': self.m,
            'dt': self.dt,
            'H': self.H,
            'seed': self.seed,
            'method': self.method
        }

# np.ndarray
def incrementAutocovariance( k, dt, H ):

    """
    Autocovariance of the increments of spacing dt,
    (dt^2H / 2) (|k + 1|^2H + |k - 1|^2H - 2 |k|^2H).

    @param k: Lags
    @type k: np.ndarray

    @param dt: Grid spacing
    @type dt: float

    @param H: Hurst index
    @type H: float

    @rtype: np.ndarray
    """

    exponent = 2.0 * kernels.hurstValue( H )
    k = np.asarray( k, dtype = float )

    return 0.5 * dt ** exponent * ( kernels.power( k + 1, exponent ) + kernels.power( k - 1, exponent ) \
        - 2.0 * kernels.power( k, exponent ) )

# np.ndarray
def _embedding( n, dt, H ):

    """
    Eigenvalues of the smallest circulant embedding of size 2N, N >= n,
    that is nonnegative up to the tolerance; None when none is found.
    """

    N = max( int( n ), 1 )
    for _ in range( MAX_DOUBLINGS + 1 ):
        gamma = incrementAutocovariance( np.arange( N + 1 ), dt, H )
        row = np.concatenate([ gamma, gamma[1:-1][::-1] ])
        eigenvalues = np.fft.fft( row ).real

        LOGGER.debug( 'circulant embedding of size %d: smallest eigenvalue %.3e', 
            len( row ), eigenvalues.min() )

        if eigenvalues.min() >= -EMBEDDING_TOLERANCE * eigenvalues.max():
            return np.maximum( eigenvalues, 0.0 )

        N *= 2

    return None

# np.ndarray
def _circulantBlock( rng, size, n, eigenvalues ):

    """
    size paths from the embedding; one complex draw gives two independent
    paths in its real and imaginary parts.
    """

    M = len( eigenvalues )
    draws = ( size + 1 ) // 2
    z = rng.standard_normal( ( draws, M ) ) + 1j * rng.standard_normal( ( draws, M ) )
    y = np.fft.fft( np.sqrt( eigenvalues / M ) * z, axis = 1 )[:, :n]

    return np.vstack([ y.real, y.imag ])[:size]

# np.ndarray
def _choleskyBlock( rng, size, factor ):
    return rng.standard_normal( ( size, factor.shape[0] ) ) @ factor.T

# SamplePaths
def sampleFbmIncrements( n, dt, H, m, seed, threads = 1, method = None ):

    """
    Exact Gaussian sampling of m paths of n increments with the
    autocovariance of fractional Gaussian noise. Circulant embedding is
    used when a nonnegative embedding exists, a dense Cholesky factor of
    the Toeplitz covariance otherwise. Paths are generated in blocks, every
    block from its own Philox stream spawned from the seed, so the result
    does not depend on the number of threads.

    @param n: Increments per path
    @type n: int

    @param dt: Grid spacing
    @type dt: float

    @param H: Hurst index
    @type H: float

    @param m: Number of paths
    @type m: int

    @param seed: Root seed
    @type seed: int

    @param threads: Worker threads over the blocks
    @type threads: int

    @param method: Force 'circulant' or 'cholesky'
    @type method: str

    @rtype: sampler.SamplePaths
    """

    H = kernels.hurstValue( H )
    n, m, dt = int( n ), int( m ), float( dt )

    if n < 1 or m < 1:
        raise ValidationError( 'sampling needs n >= 1 and m >= 1 (got n={}, m={}).'.format( n, m ) )

    if not dt > 0:
        raise ValidationError( 'dt must be positive (got {!r}).'.format( dt ) )

    if method not in ( None, CIRCULANT, CHOLESKY ):
        raise ValidationError( "method must be 'circulant' or 'cholesky' (got {!r}).".format( method ) )

    eigenvalues = _embedding( n, dt, H ) if method != CHOLESKY else None
    if eigenvalues is not None:
        method = CIRCULANT
        draw = lambda rng, size: _circulantBlock( rng, size, n, eigenvalues )

    else:
        if method == CIRCULANT:
            raise SamplingError( 'no nonnegative circulant embedding was found.' )

        try:
            factor = linalg.cholesky( 
                linalg.toeplitz( incrementAutocovariance( np.arange( n ), dt, H ) ), lower = True )

        except linalg.LinAlgError as e:
            raise SamplingError( 'both the circulant embedding and the dense factor failed: {}'.format( e ) )

        method = CHOLESKY
        draw = lambda rng, size: _choleskyBlock( rng, size, factor )

    sizes = [ min( BLOCK_SIZE, m - start ) for start in range( 0, m, BLOCK_SIZE ) ]
    streams = np.random.SeedSequence( seed ).spawn( len( sizes ) )

    def block( index ):
        rng = np.random.Generator( np.random.Philox( streams[ index ] ) )
        return draw( rng, sizes[ index ] )

    if threads > 1 and len( sizes ) > 1:
        with ThreadPoolExecutor( max_workers = int( threads ) ) as executor:
            blocks = list( executor.map( block, range( len( sizes ) ) ) )

    else:
        blocks = [ block( index ) for index in range( len( sizes ) ) ]

    LOGGER.info( 'sampled %d paths of %d increments at H=%r by %s', m, n, H, method )
    return SamplePaths( np.vstack( blocks ), dt, H, seed, method )

# tuple<float,float>
def lag1Correlation( paths ):

    """
    Ratio estimate of the lag one correlation of the increments with its
    standard error (delta method over the per-path statistics).

    @param paths: Sample paths, n >= 2
    @type paths: sampler.SamplePaths

    @return: Estimate and standard error
    @rtype: tuple<float,float>
    """

    if paths.n < 2 or paths.m < 2:
        raise ValidationError( 'lag one correlation needs n >= 2 and m >= 2.' )

    x = paths.data
    products = np.mean( x[:, :-1] * x[:, 1:], axis = 1 )
    squares = np.mean( x * x, axis = 1 )

    ratio = products.mean() / squares.mean()
    error = np.std( products - ratio * squares, ddof = 1 ) / np.sqrt( paths.m ) / squares.mean()

    return float( ratio ), float( error )

# float
def theoreticalLag1( H ):
    return 2.0 ** ( 2.0 * kernels.hurstValue( H ) - 1.0 ) - 1.0

# np.ndarray
def analyticCovariance( n, dt, H ):
    basis = kernels.IncrementBasis.fromGrid( kernels.TimeGrid( 0.0, n * dt, n + 1 ) )
    return kernels.gram( basis, H )

# float
def covarianceDistance( paths ):

    """
    Frobenius distance between the sample covariance of the increments and
    the analytic one.

    @rtype: float
    """

    sample = np.cov( paths.data, rowvar = False )
    return float( np.linalg.norm( np.atleast_2d( sample ) - analyticCovariance( paths.n, paths.dt, paths.H ) ) )

# float
def _splitInformation( S, split ):
    return geometry.mutualInformationDet( S[:split, :split], S[split:, split:], S[:split, split:] )

# lab.Report
def empiricalMiCheck( paths, split, H = None, resamples = 25, seed = 0 ):

    """
    Plug-in Gaussian information between the first split increments and the
    remaining ones, from the sample covariance, compared with the analytic
    value on the same grid. The plug-in bias is about
    split (n - split) / (2 m); the spread is the standard deviation over
    bootstrap resamples of the paths.

    @param paths: Sample paths
    @type paths: sampler.SamplePaths

    @param split: Number of increments of the first block, 1 <= split <= n - 1
    @type split: int

    @param H: Hurst index of the analytic value (defaults to the paths' one)
    @type H: float

    @param resamples: Bootstrap resamples
    @type resamples: int

    @param seed: Seed of the bootstrap
    @type seed: int

    @rtype: lab.Report
    """

    split = int( split )
    H = paths.H if H is None else kernels.hurstValue( H )

    if not 1 <= split <= paths.n - 1:
        raise ValidationError( 'split must lie in [1, n - 1] = [1, {}] (got {}).'.format( paths.n - 1, split ) )

    if not paths.m > paths.n:
        raise ValidationError( 'plug-in covariance needs more paths than increments (m={}, n={}).'.format( 
            paths.m, paths.n ) )

    empirical = _splitInformation( np.cov( paths.data, rowvar = False ), split )
    analytic = _splitInformation( analyticCovariance( paths.n, paths.dt, H ), split )

    rng = np.random.Generator( np.random.Philox( np.random.SeedSequence( seed ) ) )
    replicates = []
    for _ in range( int( resamples ) ):
        rows = rng.integers( 0, paths.m, paths.m )
        replicates.append( _splitInformation( np.cov( paths.data[ rows ], rowvar = False ), split ) )

    spread = float( np.std( replicates, ddof = 1 ) ) if len( replicates ) > 1 else 0.0
    bias = split * ( paths.n - split ) / ( 2.0 * paths.m )
    gap = abs( empirical - analytic )

    state = State()
    consistent = gap <= 3.0 * spread + bias
    if not consistent:
        state.setMessage( 'plug-in information off by {:.3e} (spread {:.3e}, bias {:.3e})'.format( 
            gap, spread, bias ) )

    LOGGER.info( 'plug-in information %.6e vs analytic %.6e', empirical, analytic )

    config = paths.getData()
    config.update({ 'split': split, 'resamples': int( resamples ) })
    return Report( 'sample', config, values = {
        'empirical': empirical,
        'analytic': analytic,
        'gap': gap,
        'bias': bias,
        'spread': spread,
        'consistent': bool( consistent )
    }, state = state )

# void
def exportPaths( paths, path ):

    """
    Writes the increments as little endian float64, row major, and a JSON
    sidecar (path + '.json') with n, m, dt, H, seed and method.

    @param paths: Sample paths
    @type paths: sampler.SamplePaths

    @param path: Output file
    @type path: str
    """

    np.ascontiguousarray( paths.data, dtype = '<f8' ).tofile( path )
    with open( path + '.json', 'w' ) as stream:
        json.dump( paths.getData(), stream, sort_keys = True, indent = 2 )

    LOGGER.info( 'wrote %d x %d increments to %s', paths.m, paths.n, path )
