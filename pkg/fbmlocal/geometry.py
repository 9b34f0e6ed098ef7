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

import logging, warnings
import numpy as np
from scipy import linalg
from . import kernels
from .state import State
from .exceptions import DegenerateSubspaceError, IllConditionedWarning, ValidationError

LOGGER = logging.getLogger( __name__ )

# Relative tolerance of the rank truncation
DEFAULT_RTOL = 1e-10

# Condition estimate above which the whitening is flagged
COND_LIMIT = 1e12

# Canonical correlations above 1 by more than this are not round-off
CLAMP_TOLERANCE = 1e-8

# Canonical correlations this close to 1 make the information infinite
INFINITE_TOLERANCE = 1e-12

class CanonicalSpectrum( object ):

    """
    Canonical correlations between two finite dimensional Gaussian
    subspaces, sorted descending and clamped to [0, 1]. Their squares are
    the nonzero eigenvalues of P_A P_B P_A.
    """

    # void
    def __init__( self, sigmas, rankA, rankB, cond = 1.0, state = None ):

        """
        Canonical correlations between two Gaussian subspaces.

        @param sigmas: Canonical correlations
        @type sigmas: list<float>

        @param rankA: Effective rank of the first Gram matrix
        @type rankA: int

        @param rankB: Effective rank of the second Gram matrix
        @type rankB: int

        @param cond: Condition estimate of the whitening factors
        @type cond: float

        @param state: Quality state (ill-conditioned, truncated)
        @type state: state.State
        """

        sigmas = np.clip( np.asarray( sigmas, dtype = float ).ravel(), 0.0, 1.0 )
        self.sigmas = np.sort( sigmas )[::-1]
        self.rankA = int( rankA )
        self.rankB = int( rankB )
        self.cond = float( cond )
        self.state = state or State()

    # int
    def __len__( self ):
        return len( self.sigmas )

    # state.State
    def getState( self ):
        return self.state

class MiResult( object ):

    """
    Mutual information in nats with its Hilbert-Schmidt bounds. An
    infinite value is represented by the infinite flag, the value and the
    upper bound are None then.
    """

    # void
    def __init__( self, value, lower, upper, infinite = False ):

        """
        Mutual information with its bounds.

        @param value: Mutual information, None when infinite
        @type value: float

        @param lower: Lower bound
        @type lower: float

        @param upper: Upper bound, None when infinite
        @type upper: float

        @param infinite: Infinite flag
        @type infinite: bool
        """

        self.value = None if infinite else float( value )
        self.lower = float( lower )
        self.upper = None if upper is None else float( upper )
        self.infinite = bool( infinite )

    # bool
    def isInfinite( self ):
        return self.infinite

    # float
    def asFloat( self ):

        """
        Returns the value as a float, inf for the infinite flag.

        @rtype: float
        """

        return float( 'inf' ) if self.infinite else self.value

# tuple<np.ndarray,np.ndarray,int>
def pivotedCholesky( G, rtol = DEFAULT_RTOL ):

    """
    Rank revealing Cholesky factorization with diagonal pivoting. The
    elimination stops when the largest remaining diagonal entry is at most
    rtol times the first pivot.

    @param G: Symmetric positive semi-definite matrix
    @type G: np.ndarray

    @param rtol: Relative tolerance of the truncation
    @type rtol: float

    @return: Factor L (n x rank, lower trapezoidal), pivot order and rank;
        G[piv][:, piv] ~ L L^T.
    @rtype: tuple<np.ndarray,np.ndarray,int>
    """

    A = np.array( G, dtype = float, copy = True )
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError( 'pivoted Cholesky needs a square matrix.' )

    n = A.shape[0]
    piv = np.arange( n )
    rank = n
    first = None

    for i in range( n ):
        j = i + int( np.argmax( np.diagonal( A )[i:] ) )
        a_max = A[j, j]

        if i == 0:
            first = a_max
            if not first > 0:
                rank = 0
                break

        elif a_max <= rtol * first:
            rank = i
            break

        # Symmetric row/column permutation.
        if j != i:
            A[:, [i, j]] = A[:, [j, i]]
            A[[i, j], :] = A[[j, i], :]
            piv[[i, j]] = piv[[j, i]]

        A[i, i] = np.sqrt( A[i, i] )
        A[i + 1:, i] /= A[i, i]
        A[i + 1:, i + 1:] -= np.outer( A[i + 1:, i], A[i + 1:, i] )

    return np.tril( A )[:, :rank], piv, rank

# np.ndarray
def _scales( G ):
    d = np.diagonal( G ).astype( float )
    return np.where( d > 0, np.sqrt( np.abs( d ) ), 1.0 )

# CanonicalSpectrum
def canonicalCorrelations( GA, GB, C, rtol = DEFAULT_RTOL ):

    """
    Canonical correlations of two Gaussian vectors given their Gram
    matrices and cross-covariance. Both Gram matrices are scaled to
    correlation matrices, factored by pivoted Cholesky with rank truncation,
    and the singular values of the whitened cross-covariance are returned.

    @param GA: Gram matrix of the first vector
    @type GA: np.ndarray

    @param GB: Gram matrix of the second vector
    @type GB: np.ndarray

    @param C: Cross-covariance, shape (len(GA), len(GB))
    @type C: np.ndarray

    @param rtol: Relative tolerance of the rank truncation, in (0, 1)
    @type rtol: float

    @rtype: geometry.CanonicalSpectrum
    """

    GA, GB, C = np.atleast_2d( GA ), np.atleast_2d( GB ), np.atleast_2d( C )
    if C.shape != ( GA.shape[0], GB.shape[0] ):
        raise ValidationError( 'cross-covariance of shape {} does not match {} and {}.'.format( 
            C.shape, GA.shape, GB.shape ) )

    if not 0 < rtol < 1:
        raise ValidationError( 'rtol must lie in the open interval (0, 1).' )

    dA, dB = _scales( GA ), _scales( GB )
    LA, pA, rA = pivotedCholesky( GA / np.outer( dA, dA ), rtol )
    LB, pB, rB = pivotedCholesky( GB / np.outer( dB, dB ), rtol )

    if rA == 0 or rB == 0:
        raise DegenerateSubspaceError( 'a Gram matrix has effective rank 0.' )

    state = State( truncated = ( rA < len( GA ) or rB < len( GB ) ) )
    K = ( C / np.outer( dA, dB ) )[ np.ix_( pA[:rA], pB[:rB] ) ]

    LA11, LB11 = LA[:rA, :rA], LB[:rB, :rB]
    W = linalg.solve_triangular( LA11, K, lower = True )
    W = linalg.solve_triangular( LB11, W.T, lower = True ).T

    sigmas = linalg.svd( W, compute_uv = False )
    cond = max( np.linalg.cond( LA11 ), np.linalg.cond( LB11 ) ) ** 2

    if len( sigmas ) and sigmas[0] > 1.0 + CLAMP_TOLERANCE:
        state.setIllConditioned()
        state.setMessage( 'canonical correlation {:.3e} above 1'.format( sigmas[0] ) )
        warnings.warn( 'canonical correlation {!r} exceeds 1, clamped'.format( sigmas[0] ), 
            IllConditionedWarning, stacklevel = 2 )

    if cond > COND_LIMIT:
        state.setIllConditioned()
        state.setMessage( 'whitening condition {:.3e}'.format( cond ) )
        warnings.warn( 'whitening condition estimate {:.3e} exceeds {:.0e}'.format( 
            cond, COND_LIMIT ), IllConditionedWarning, stacklevel = 2 )

    LOGGER.debug( 'canonical correlations: ranks %d/%d, %d/%d, cond %.3e', 
        rA, len( GA ), rB, len( GB ), cond )

    return CanonicalSpectrum( sigmas, rA, rB, cond, state )

# float
def cosAngle( spec ):

    """
    Cosine of the angle between the subspaces, the largest canonical
    correlation (0 for an empty spectrum).

    @param spec: Canonical spectrum
    @type spec: geometry.CanonicalSpectrum

    @rtype: float
    """

    return float( spec.sigmas[0] ) if len( spec ) else 0.0

# float
def hilbertSchmidtNorm( spec ):
    return float( np.sqrt( np.sum( spec.sigmas ** 2 ) ) )

# tuple<float,float>
def miBoundsHs( spec ):

    """
    Hilbert-Schmidt bounds of the mutual information. With h the squared
    Hilbert-Schmidt norm and m the largest canonical correlation:
    h/2 <= I <= h/2 (1 + m / (2 (1 - m))).

    @param spec: Canonical spectrum
    @type spec: geometry.CanonicalSpectrum

    @return: Lower bound and upper bound (None when m is 1)
    @rtype: tuple<float,float>
    """

    h = float( np.sum( spec.sigmas ** 2 ) )
    m = cosAngle( spec )

    if m >= 1.0 - INFINITE_TOLERANCE:
        return h / 2.0, None

    return h / 2.0, ( h / 2.0 ) * ( 1.0 + m / ( 2.0 * ( 1.0 - m ) ) )

# MiResult
def mutualInformationGy( spec ):

    """
    Mutual information of Gaussian subspaces from their canonical
    correlations, -1/2 sum log(1 - sigma_k^2).

    @param spec: Canonical spectrum
    @type spec: geometry.CanonicalSpectrum

    @rtype: geometry.MiResult
    """

    lower, upper = miBoundsHs( spec )
    if len( spec ) and spec.sigmas[0] >= 1.0 - INFINITE_TOLERANCE:
        return MiResult( None, lower, None, infinite = True )

    value = -0.5 * float( np.sum( np.log1p( -spec.sigmas ** 2 ) ) )
    return MiResult( value, lower, upper )

# float
def bivariateInformation( rho ):

    """
    Mutual information of two jointly Gaussian variables with correlation
    rho, -log sin(angle) = -1/2 log(1 - rho^2).

    @param rho: Correlation
    @type rho: float

    @rtype: float
    """

    rho = abs( float( rho ) )
    if rho >= 1.0:
        return float( 'inf' )

    return -0.5 * float( np.log1p( -rho * rho ) )

# float
def _logdet( G, what ):
    try:
        L = np.linalg.cholesky( G )

    except np.linalg.LinAlgError:
        raise DegenerateSubspaceError( '{} covariance is not positive definite.'.format( what ) )

    return 2.0 * float( np.sum( np.log( np.diagonal( L ) ) ) )

# float
def mutualInformationDet( GA, GB, C ):

    """
    Mutual information from determinants,
    1/2 log( det(GA) det(GB) / det(joint) ), where joint is the block
    matrix [[GA, C], [C^T, GB]]. The joint covariance must be strictly
    positive definite.

    @param GA: Gram matrix of the first vector
    @type GA: np.ndarray

    @param GB: Gram matrix of the second vector
    @type GB: np.ndarray

    @param C: Cross-covariance
    @type C: np.ndarray

    @rtype: float
    """

    GA, GB, C = np.atleast_2d( GA ), np.atleast_2d( GB ), np.atleast_2d( C )
    if C.shape != ( GA.shape[0], GB.shape[0] ):
        raise ValidationError( 'cross-covariance does not match the Gram matrices.' )

    joint = np.block([ [ GA, C ], [ C.T, GB ] ])
    d = _scales( joint )
    joint = joint / np.outer( d, d )

    n = GA.shape[0]
    return 0.5 * ( _logdet( joint[:n, :n], 'first' ) + _logdet( joint[n:, n:], 'second' ) \
        - _logdet( joint, 'joint' ) )

# tuple<CanonicalSpectrum,MiResult>
def subspaceInformation( basisA, basisB, H, rtol = DEFAULT_RTOL ):

    """
    Canonical spectrum and mutual information of two increment bases.

    @param basisA: First increment basis
    @type basisA: kernels.IncrementBasis

    @param basisB: Second increment basis
    @type basisB: kernels.IncrementBasis

    @param H: Hurst index
    @type H: float

    @param rtol: Whitening tolerance
    @type rtol: float

    @rtype: tuple<geometry.CanonicalSpectrum,geometry.MiResult>
    """

    spec = canonicalCorrelations( 
        kernels.gram( basisA, H ), 
        kernels.gram( basisB, H ), 
        kernels.crossGram( basisA, basisB, H ), 
        rtol 
    )

    return spec, mutualInformationGy( spec )
