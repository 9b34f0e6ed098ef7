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
import numpy as np
from scipy import optimize
from scipy.spatial.distance import cdist
from .exceptions import ValidationError, DimensionMismatchError

LOGGER = logging.getLogger( __name__ )

# Distance kept from the endpoints of (0, 1)
HURST_GUARD = 1e-9

class Hurst( object ):

    """
    Hurst index of a fractional Brownian motion, a real in the open
    interval (0, 1). H = 1/2 is the Brownian motion.
    """

    # void
    def __init__( self, value ):

        """
        Hurst index of a fractional Brownian motion.

        @param value: Index in (0, 1), kept 1e-9 away from the endpoints
        @type value: float
        """

        value = float( value )
        if not HURST_GUARD < value < 1.0 - HURST_GUARD:
            raise ValidationError( 
                'H must lie in the open interval (0, 1) (got {!r}).'.format( value ) 
            )

        self.value = value

    # float
    def __float__( self ):
        return self.value

    # str
    def __repr__( self ):
        return 'Hurst({!r})'.format( self.value )

    # bool
    def isBrownian( self ):
        return self.value == 0.5

# float
def hurstValue( H ):

    """
    Returns the validated float value of a Hurst index.

    @param H: Hurst index
    @type H: float or kernels.Hurst

    @return: Index value
    @rtype: float
    """

    if isinstance( H, Hurst ):
        return H.value

    return Hurst( H ).value

# np.ndarray
def power( x, exponent ):

    """
    Returns |x|^exponent evaluated as exp(exponent * log|x|), with an
    explicit zero branch at the origin.

    @param x: Points
    @type x: np.ndarray

    @param exponent: Positive exponent (2H)
    @type exponent: float

    @rtype: np.ndarray
    """

    ax = np.abs( np.asarray( x, dtype = float ) )
    with np.errstate( divide = 'ignore' ):
        return np.where( ax > 0, np.exp( exponent * np.log( ax ) ), 0.0 )

# np.ndarray
def _powerDifference( y, d, exponent ):

    """
    Returns |y + d|^exponent - |y|^exponent. When the step is small
    compared with the base point the difference is evaluated as
    |y|^exponent * expm1(exponent * log1p(d / y)).
    """

    y = np.asarray( y, dtype = float )
    d = np.asarray( d, dtype = float )

    with np.errstate( divide = 'ignore', invalid = 'ignore' ):
        small = ( y != 0 ) & ( np.abs( d ) < 0.5 * np.abs( y ) )
        ratio = np.where( small, d / np.where( y != 0, y, 1.0 ), 0.0 )
        stable = power( y, exponent ) * np.expm1( exponent * np.log1p( ratio ) )

    return np.where( small, stable, power( y + d, exponent ) - power( y, exponent ) )

# np.ndarray
def _incrementCov( ps, pt, qs, qt, exponent ):

    """
    Covariance of the increments X_pt - X_ps and X_qt - X_qs by nested
    differences. The inner difference runs over the shorter increment.
    """

    ps, pt, qs, qt = np.broadcast_arrays( *[ np.asarray( v, dtype = float ) \
        for v in ( ps, pt, qs, qt ) ] )

    swap = np.abs( pt - ps ) > np.abs( qt - qs )
    a_s, a_t = np.where( swap, qs, ps ), np.where( swap, qt, pt )
    b_s, b_t = np.where( swap, ps, qs ), np.where( swap, pt, qt )

    step = a_t - a_s
    return 0.5 * ( _powerDifference( a_s - b_s, step, exponent ) \
        - _powerDifference( a_s - b_t, step, exponent ) )

# float
def fbmCov( u, v, H ):

    """
    Covariance of a fractional Brownian motion,
    1/2 (|u|^2H + |v|^2H - |u - v|^2H).

    @param u: Time (or array of times)
    @type u: float

    @param v: Time (or array of times)
    @type v: float

    @param H: Hurst index
    @type H: float

    @return: E[X_u X_v]
    @rtype: float
    """

    exponent = 2.0 * hurstValue( H )
    u = np.asarray( u, dtype = float )
    v = np.asarray( v, dtype = float )

    value = 0.5 * ( power( u, exponent ) + power( v, exponent ) - power( u - v, exponent ) )
    return float( value ) if value.ndim == 0 else value

# float
def incrementCov( p, q, H ):

    """
    Covariance of two increments, 
    E[(X_p.t - X_p.s)(X_q.t - X_q.s)]
      = 1/2 (|p.t - q.s|^2H + |q.t - p.s|^2H - |p.t - q.t|^2H - |p.s - q.s|^2H).

    @param p: Time pair (s, t)
    @type p: tuple<float,float>

    @param q: Time pair (s, t)
    @type q: tuple<float,float>

    @param H: Hurst index
    @type H: float

    @rtype: float
    """

    value = _incrementCov( p[0], p[1], q[0], q[1], 2.0 * hurstValue( H ) )
    return float( value ) if value.ndim == 0 else value

# float
def disjointKernel( u, v, H ):

    """
    Kernel of the increment covariance for disjoint supports,
    H(2H - 1)|u - v|^(2H - 2). Its sign is the sign of 2H - 1 and it
    vanishes for the Brownian motion.

    @param u: Time
    @type u: float

    @param v: Time
    @type v: float

    @param H: Hurst index
    @type H: float

    @rtype: float
    """

    H = hurstValue( H )
    distance = np.abs( np.asarray( u, dtype = float ) - np.asarray( v, dtype = float ) )

    if np.any( distance == 0 ):
        raise ValidationError( 'disjoint kernel is singular at u = v.' )

    value = H * ( 2.0 * H - 1.0 ) * np.exp( ( 2.0 * H - 2.0 ) * np.log( distance ) )
    return float( value ) if value.ndim == 0 else value

class TimeGrid( object ):

    """
    Uniform grid t_i = a + i (b - a) / (n - 1) of n points on [a, b].
    """

    # void
    def __init__( self, a, b, n ):

        """
        Uniform grid of n points on [a, b].

        @param a: Left end
        @type a: float

        @param b: Right end
        @type b: float

        @param n: Number of points (at least 2)
        @type n: int
        """

        a, b, n = float( a ), float( b ), int( n )
        if not a < b:
            raise ValidationError( 'grid needs a < b (got a={!r}, b={!r}).'.format( a, b ) )

        if n < 2:
            raise ValidationError( 'grid needs at least 2 points (got {}).'.format( n ) )

        self.a = a
        self.b = b
        self.n = n

    # np.ndarray
    def getPoints( self ):
        return np.linspace( self.a, self.b, self.n )

    # float
    def getSpacing( self ):
        return ( self.b - self.a ) / ( self.n - 1 )

    # int
    def __len__( self ):
        return self.n

class IncrementBasis( object ):

    """
    Ordered list of time pairs (s_i, t_i). Every pair defines the random
    variable X_t_i - X_s_i; together they span a subspace of the Gaussian
    space of the process.
    """

    # void
    def __init__( self, starts, ends ):

        """
        Ordered list of time pairs.

        @param starts: s_i values
        @type starts: list<float>

        @param ends: t_i values
        @type ends: list<float>
        """

        starts = np.array( starts, dtype = float ).ravel()
        ends = np.array( ends, dtype = float ).ravel()

        if len( starts ) == 0 or len( starts ) != len( ends ):
            raise ValidationError( 'increment basis needs a nonempty list of time pairs.' )

        if np.any( starts == ends ):
            raise ValidationError( 'increment basis pairs need s != t.' )

        self.starts = starts
        self.ends = ends

    # IncrementBasis
    @classmethod
    def fromPairs( cls, pairs ):
        pairs = np.asarray( pairs, dtype = float ).reshape( -1, 2 )
        return cls( pairs[:, 0], pairs[:, 1] )

    # IncrementBasis
    @classmethod
    def fromPoints( cls, points ):

        """
        Consecutive increments (t_i, t_i+1) of an increasing point list.

        @param points: Strictly increasing times
        @type points: list<float>

        @rtype: kernels.IncrementBasis
        """

        points = np.asarray( points, dtype = float )
        if len( points ) < 2 or np.any( np.diff( points ) <= 0 ):
            raise ValidationError( 'points must be strictly increasing (at least 2).' )

        return cls( points[:-1], points[1:] )

    # IncrementBasis
    @classmethod
    def fromGrid( cls, grid ):
        return cls.fromPoints( grid.getPoints() )

    # IncrementBasis
    def union( self, other ):
        return IncrementBasis( 
            np.concatenate([ self.starts, other.starts ]), 
            np.concatenate([ self.ends, other.ends ]) 
        )

    # IncrementBasis
    def shift( self, c ):
        return IncrementBasis( self.starts + c, self.ends + c )

    # IncrementBasis
    def scale( self, a ):
        return IncrementBasis( self.starts * a, self.ends * a )

    # list<tuple<float,float>>
    def getPairs( self ):
        return list( zip( self.starts.tolist(), self.ends.tolist() ) )

    # np.ndarray
    def getLengths( self ):
        return self.ends - self.starts

    # int
    def __len__( self ):
        return len( self.starts )

# np.ndarray
def crossGram( basisA, basisB, H ):

    """
    Cross-covariance matrix of two increment bases,
    entry (i, j) = incrementCov(A_i, B_j).

    @param basisA: First basis
    @type basisA: kernels.IncrementBasis

    @param basisB: Second basis
    @type basisB: kernels.IncrementBasis

    @param H: Hurst index
    @type H: float

    @rtype: np.ndarray
    """

    return _incrementCov( 
        basisA.starts[:, None], basisA.ends[:, None], 
        basisB.starts[None, :], basisB.ends[None, :], 
        2.0 * hurstValue( H )
    )

# np.ndarray
def gram( basis, H ):

    """
    Gram (covariance) matrix of an increment basis. The matrix is
    symmetric positive semi-definite up to round-off.

    @param basis: Increment basis
    @type basis: kernels.IncrementBasis

    @param H: Hurst index
    @type H: float

    @rtype: np.ndarray
    """

    G = crossGram( basis, basis, H )
    LOGGER.debug( 'gram of %d increments at H=%s', len( basis ), hurstValue( H ) )

    return 0.5 * ( G + G.T )

# np.ndarray
def gradedGrid( a, b, cells, toward, depth ):

    """
    Geometric grid on [a, b] concentrating toward one endpoint. The cell
    next to that endpoint has length depth * (b - a), the cell lengths grow
    by a constant ratio away from it.

    @param a: Left end
    @type a: float

    @param b: Right end
    @type b: float

    @param cells: Number of cells
    @type cells: int

    @param toward: The endpoint (a or b) where the grid is finest
    @type toward: float

    @param depth: Relative length of the finest cell, at most 1 / cells
    @type depth: float

    @return: cells + 1 strictly increasing points
    @rtype: np.ndarray
    """

    a, b, cells, depth = float( a ), float( b ), int( cells ), float( depth )

    if not a < b:
        raise ValidationError( 'graded grid needs a < b.' )

    if cells < 1:
        raise ValidationError( 'graded grid needs at least one cell.' )

    if toward not in ( a, b ):
        raise ValidationError( 'graded grid must concentrate toward a or b.' )

    if not 0 < depth <= 1.0 / cells * ( 1 + 1e-12 ):
        raise ValidationError( 'graded grid depth must lie in (0, 1/cells].' )

    if abs( depth * cells - 1.0 ) < 1e-12 or cells == 1:
        ratio = 1.0

    else:
        # total relative length of the cells for a given ratio, minus one
        def excess( q ):
            return depth * np.expm1( cells * np.log( q ) ) / np.expm1( np.log( q ) ) - 1.0

        upper = 2.0
        while excess( upper ) <= 0:
            upper *= 2.0

        ratio = optimize.brentq( excess, 1.0 + 1e-12, upper, xtol = 1e-15, rtol = 1e-15 )

    lengths = ratio ** np.arange( cells )
    offsets = np.concatenate([ [ 0.0 ], np.cumsum( lengths ) ])
    offsets = offsets / offsets[-1]

    # distances are measured from the fine end
    if toward == b:
        points = b - ( b - a ) * offsets[::-1]

    else:
        points = a + ( b - a ) * offsets

    points[0], points[-1] = a, b

    LOGGER.debug( 'graded grid on (%s, %s): %d cells, ratio %.6f', a, b, cells, ratio )
    return points

# np.ndarray
def _asPoints( points ):
    points = np.asarray( points, dtype = float )
    return points.reshape( 1, -1 ) if points.ndim == 1 else points

# np.ndarray
def _asCenters( centers, points ):
    centers = _asPoints( centers )
    if centers.shape[1] != points.shape[1] or centers.shape[0] not in ( 1, points.shape[0] ):
        raise DimensionMismatchError( 'centers must match the points they belong to.' )

    return np.broadcast_to( centers, points.shape )

# float
def levyFbmCov( u, v, H ):

    """
    Covariance of the Levy fractional Brownian motion indexed by R^n,
    1/2 (|u|^2H + |v|^2H - |u - v|^2H) with Euclidean norms.

    @param u: Point
    @type u: list<float>

    @param v: Point
    @type v: list<float>

    @param H: Hurst index
    @type H: float

    @rtype: float
    """

    exponent = 2.0 * hurstValue( H )
    u = np.asarray( u, dtype = float ).ravel()
    v = np.asarray( v, dtype = float ).ravel()

    if u.shape != v.shape:
        raise DimensionMismatchError( 
            'points of dimension {} and {} can not be compared.'.format( len( u ), len( v ) ) 
        )

    return float( 0.5 * ( power( np.linalg.norm( u ), exponent ) \
        + power( np.linalg.norm( v ), exponent ) \
        - power( np.linalg.norm( u - v ), exponent ) ) )

# np.ndarray
def levyCrossGram( pointsA, centersA, pointsB, centersB, H ):

    """
    Cross-covariance of the differences X_p - X_c (rows of A) and
    X_q - X_d (rows of B) of a Levy fractional Brownian motion:
    1/2 (|p - d|^2H + |c - q|^2H - |p - q|^2H - |c - d|^2H).

    @param pointsA: Points p, shape (m, n)
    @type pointsA: np.ndarray

    @param centersA: Base points c, shape (m, n) or (n,)
    @type centersA: np.ndarray

    @param pointsB: Points q, shape (k, n)
    @type pointsB: np.ndarray

    @param centersB: Base points d, shape (k, n) or (n,)
    @type centersB: np.ndarray

    @param H: Hurst index
    @type H: float

    @rtype: np.ndarray
    """

    exponent = 2.0 * hurstValue( H )
    pointsA, pointsB = _asPoints( pointsA ), _asPoints( pointsB )
    if pointsA.shape[1] != pointsB.shape[1]:
        raise DimensionMismatchError( 'points of dimension {} and {} can not be compared.'.format( 
            pointsA.shape[1], pointsB.shape[1] ) )

    centersA = _asCenters( centersA, pointsA )
    centersB = _asCenters( centersB, pointsB )

    def term( x, y ):
        return power( cdist( x, y ), exponent )

    return 0.5 * ( term( pointsA, centersB ) + term( centersA, pointsB ) \
        - term( pointsA, pointsB ) - term( centersA, centersB ) )

# np.ndarray
def levyGram( points, centers, H ):
    G = levyCrossGram( points, centers, points, centers, H )
    return 0.5 * ( G + G.T )
