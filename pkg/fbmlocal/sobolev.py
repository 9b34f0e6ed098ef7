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

import functools
import logging
import warnings
import numpy as np
from scipy import integrate, linalg, special
from . import kernels
from .fitting import fitPowerLaw
from .state import State
from .exceptions import ValidationError, TailNotConvergedError, TruncationWarning

LOGGER = logging.getLogger( __name__ )

# Distance kept from the endpoints of (-1/2, 1/2)
SMOOTHNESS_GUARD = 1e-9

# Target of the analytic tail bound, relative to the lag 0 head
TAIL_TARGET = 1e-10

# Tail bound above this share of the lag 0 head is an error
TAIL_LIMIT = 1e-8

# Largest frequency cutoff
XI_MAX = 1e9

# Ratio of consecutive body panels
PANEL_RATIO = 4.0

# Lag values are cached on this many decimals
LAG_DECIMALS = 9

class SmoothnessIndex( object ):

    """
    Smoothness index s of the homogeneous Sobolev space, a real with
    |s| < 1/2.
    """

    # void
    def __init__( self, value ):
        value = float( value )
        if not abs( value ) < 0.5 - SMOOTHNESS_GUARD:
            raise ValidationError( 
                's must lie in the open interval (-1/2, 1/2) (got {!r}).'.format( value ) 
            )

        self.value = value

    # float
    def __float__( self ):
        return self.value

    # str
    def __repr__( self ):
        return 'SmoothnessIndex({!r})'.format( self.value )

# float
def smoothnessValue( s ):
    if isinstance( s, SmoothnessIndex ):
        return s.value

    return SmoothnessIndex( s ).value

class TestFunction( object ):

    """
    Compactly supported test function on a uniform grid, a combination
    of hat elements (piecewise linear, node k at origin + k * spacing,
    support of half-width spacing) or of step elements (cell k is
    [origin + k * spacing, origin + (k + 1) * spacing)).
    """

    __test__ = False

    HAT = 'hat'
    STEP = 'step'

    KINDS = ( HAT, STEP )

    # void
    def __init__( self, kind, origin, spacing, coeffs ):

        """
        Test function on a uniform grid.

        @param kind: Element kind, 'hat' or 'step'
        @type kind: str

        @param origin: First node (hat) or left edge of the first cell (step)
        @type origin: float

        @param spacing: Grid spacing
        @type spacing: float

        @param coeffs: Element coefficients
        @type coeffs: list<float>
        """

        if kind not in self.KINDS:
            raise ValidationError( 'kind must be one of {} (got {!r}).'.format( 
                ', '.join( self.KINDS ), kind ) )

        spacing = float( spacing )
        if not spacing > 0 or not np.isfinite( spacing ):
            raise ValidationError( 'spacing must be positive (got {!r}).'.format( spacing ) )

        coeffs = np.atleast_1d( np.asarray( coeffs, dtype = float ) )
        if coeffs.ndim != 1 or not len( coeffs ):
            raise ValidationError( 'a test function needs at least one coefficient.' )

        self.kind = kind
        self.origin = float( origin )
        self.spacing = spacing
        self.coeffs = coeffs

    # TestFunction
    @classmethod
    def hat( cls, a, b, height = 1.0 ):

        """
        Single hat on [a, b] peaking at the midpoint.

        @rtype: sobolev.TestFunction
        """

        if not a < b:
            raise ValidationError( 'hat support needs a < b.' )

        return cls( cls.HAT, 0.5 * ( a + b ), 0.5 * ( b - a ), [ height ] )

    # TestFunction
    @classmethod
    def hats( cls, a, b, coeffs ):

        """
        Piecewise linear function on [a, b] vanishing at the endpoints,
        with the given values at the interior nodes of a uniform grid.

        @param a: Left end of the support
        @type a: float

        @param b: Right end of the support
        @type b: float

        @param coeffs: Values at the interior nodes
        @type coeffs: list<float>

        @rtype: sobolev.TestFunction
        """

        if not a < b:
            raise ValidationError( 'support needs a < b.' )

        coeffs = np.atleast_1d( np.asarray( coeffs, dtype = float ) )
        h = ( b - a ) / ( len( coeffs ) + 1.0 )
        return cls( cls.HAT, a + h, h, coeffs )

    # TestFunction
    @classmethod
    def steps( cls, a, b, coeffs ):

        """
        Piecewise constant function on len(coeffs) uniform cells of [a, b].

        @rtype: sobolev.TestFunction
        """

        if not a < b:
            raise ValidationError( 'support needs a < b.' )

        coeffs = np.atleast_1d( np.asarray( coeffs, dtype = float ) )
        return cls( cls.STEP, a, ( b - a ) / float( len( coeffs ) ), coeffs )

    # TestFunction
    @classmethod
    def indicator( cls, a, b, cells = 1 ):
        return cls.steps( a, b, np.ones( int( cells ) ) )

    # np.ndarray
    def getCenters( self ):

        """
        Returns the element centres, used as Fourier phases.

        @rtype: np.ndarray
        """

        k = np.arange( len( self.coeffs ), dtype = float )
        if self.kind == self.HAT:
            return self.origin + k * self.spacing

        return self.origin + ( k + 0.5 ) * self.spacing

    # tuple<float,float>
    def getSupport( self ):
        n = len( self.coeffs )
        if self.kind == self.HAT:
            return self.origin - self.spacing, self.origin + n * self.spacing

        return self.origin, self.origin + n * self.spacing

    # int
    def getOrder( self ):

        """
        Power of the sinc factor in |transform|^2: 4 for hats, 2 for steps.

        @rtype: int
        """

        return 4 if self.kind == self.HAT else 2

    # TestFunction
    def dilate( self, k ):

        """
        Returns x -> phi(k x).

        @param k: Positive dilation factor
        @type k: float

        @rtype: sobolev.TestFunction
        """

        k = float( k )
        if not k > 0:
            raise ValidationError( 'dilation factor must be positive (got {!r}).'.format( k ) )

        return TestFunction( self.kind, self.origin / k, self.spacing / k, self.coeffs )

    # TestFunction
    def shift( self, c ):

        """
        Returns x -> phi(x - c).

        @rtype: sobolev.TestFunction
        """

        return TestFunction( self.kind, self.origin + float( c ), self.spacing, self.coeffs )

    # TestFunction
    def refine( self, r ):

        """
        Returns the same function written on a grid r times finer.

        @param r: Positive integer refinement factor
        @type r: int

        @rtype: sobolev.TestFunction
        """

        r = int( r )
        if r < 1:
            raise ValidationError( 'refinement factor must be a positive integer.' )

        if r == 1:
            return TestFunction( self.kind, self.origin, self.spacing, self.coeffs )

        h = self.spacing / r
        if self.kind == self.STEP:
            return TestFunction( self.STEP, self.origin, h, np.repeat( self.coeffs, r ) )

        n = len( self.coeffs )
        coeffs = np.zeros( ( n - 1 ) * r + 2 * r - 1 )
        weights = 1.0 - np.abs( np.arange( -r + 1, r ) ) / float( r )
        for k, c in enumerate( self.coeffs ):
            coeffs[ k * r:k * r + 2 * r - 1 ] += c * weights

        return TestFunction( self.HAT, self.origin - ( r - 1 ) * h, h, coeffs )

    # np.ndarray
    def evaluate( self, x ):

        """
        Evaluates the function at the given points.

        @param x: Points
        @type x: np.ndarray

        @rtype: np.ndarray
        """

        x = np.asarray( x, dtype = float )
        if self.kind == self.HAT:
            u = np.subtract.outer( x, self.getCenters() ) / self.spacing
            return np.maximum( 0.0, 1.0 - np.abs( u ) ) @ self.coeffs

        index = np.floor( ( x - self.origin ) / self.spacing ).astype( int )
        inside = ( index >= 0 ) & ( index < len( self.coeffs ) )
        return np.where( inside, self.coeffs[ np.clip( index, 0, len( self.coeffs ) - 1 ) ], 0.0 )

    # np.ndarray
    def transform( self, xi ):

        """
        Unitary Fourier transform (2 pi)^(-1/2) int phi(x) exp(-i x xi) dx
        in closed form.

        @param xi: Frequencies
        @type xi: np.ndarray

        @rtype: np.ndarray
        """

        xi = np.asarray( xi, dtype = float )
        h = self.spacing
        envelope = h * np.sinc( h * xi / ( 2.0 * np.pi ) ) ** ( self.getOrder() // 2 )
        phases = np.exp( -1j * np.multiply.outer( xi, self.getCenters() ) ) @ self.coeffs
        return envelope * phases / np.sqrt( 2.0 * np.pi )

    # TestFunction
    def __add__( self, other ):
        phi, psi = _commonGrid( self, other )
        return TestFunction( phi.kind, phi.origin, phi.spacing, phi.coeffs + psi.coeffs )

    # TestFunction
    def __sub__( self, other ):
        return self + ( -1.0 ) * other

    # TestFunction
    def __mul__( self, a ):
        return TestFunction( self.kind, self.origin, self.spacing, float( a ) * self.coeffs )

    __rmul__ = __mul__

    # str
    def __repr__( self ):
        return 'TestFunction({!r}, origin={!r}, spacing={!r}, {} elements)'.format( 
            self.kind, self.origin, self.spacing, len( self.coeffs ) )

# int
def _integerRatio( ratio ):
    r = int( round( ratio ) )
    if r >= 1 and abs( ratio - r ) <= 1e-9 * r:
        return r

    return None

# tuple<TestFunction,TestFunction>
def _aligned( phi, psi ):

    """
    Returns phi and psi written with a common spacing. The spacings must be
    equal or in an integer ratio.
    """

    if phi.kind != psi.kind:
        raise ValidationError( 'test functions must have the same element kind ({} and {}).'.format( 
            phi.kind, psi.kind ) )

    ratio = phi.spacing / psi.spacing
    if _integerRatio( ratio ):
        phi = phi.refine( _integerRatio( ratio ) )

    elif _integerRatio( 1.0 / ratio ):
        psi = psi.refine( _integerRatio( 1.0 / ratio ) )

    else:
        raise ValidationError( 'test function spacings {!r} and {!r} are not in an integer ratio.'.format( 
            phi.spacing, psi.spacing ) )

    return phi, TestFunction( psi.kind, psi.origin, phi.spacing, psi.coeffs )

# tuple<TestFunction,TestFunction>
def _commonGrid( phi, psi ):

    """
    Returns phi and psi written on one node set.
    """

    phi, psi = _aligned( phi, psi )
    h = phi.spacing

    offset = ( psi.origin - phi.origin ) / h
    if abs( offset - round( offset ) ) > 1e-9 * max( 1.0, abs( offset ) ):
        raise ValidationError( 'test function grids are not aligned.' )

    offset = int( round( offset ) )
    start = min( 0, offset )
    stop = max( len( phi.coeffs ), offset + len( psi.coeffs ) )

    a, b = np.zeros( stop - start ), np.zeros( stop - start )
    a[ -start:-start + len( phi.coeffs ) ] = phi.coeffs
    b[ offset - start:offset - start + len( psi.coeffs ) ] = psi.coeffs

    origin = phi.origin + start * h
    return TestFunction( phi.kind, origin, h, a ), TestFunction( psi.kind, origin, h, b )

# tuple<float,float>
def _quad( f, a, b, **kwargs ):

    """
    QUADPACK integration; convergence messages go to the debug log.
    """

    out = integrate.quad( f, a, b, full_output = 1, limit = 200, **kwargs )
    if len( out ) > 3:
        LOGGER.debug( 'quadrature on [%g, %g]: %s', a, b, out[3] )

    return out[0], out[1]

# np.ndarray
def _sincPower( eta, order ):
    return np.sinc( eta / ( 2.0 * np.pi ) ) ** order

# float
def _head( order, s, delta ):

    """
    int_0^1 sinc^order(eta/2) cos(delta eta) eta^(2s) d eta. The algebraic
    weight handles eta^(2s) on [0, eta0]; the cosine weight handles the
    oscillation on [eta0, 1].
    """

    eta0 = min( 1.0, 1.0 / max( abs( delta ), 1.0 ) )

    value, _ = _quad( lambda eta: _sincPower( eta, order ) * np.cos( delta * eta ), 0.0, eta0, 
        weight = 'alg', wvar = ( 2.0 * s, 0.0 ), epsabs = 1e-14, epsrel = 1e-12 )

    if eta0 < 1.0:
        rest, _ = _quad( lambda eta: _sincPower( eta, order ) * eta ** ( 2.0 * s ), eta0, 1.0, 
            weight = 'cos', wvar = delta, epsabs = 1e-14, epsrel = 1e-12 )
        value += rest

    return value

# float
@functools.lru_cache( maxsize = 16 )
def _headScale( order, s ):
    return abs( _head( order, s, 0.0 ) )

# list<tuple<float,float>>
def _bodyTerms( order, delta ):

    """
    sinc^order(eta/2) cos(delta eta) as a sum of w cos(omega eta) eta^-order.
    """

    if order == 2:
        return [ ( 2.0, delta ), ( -1.0, delta - 1.0 ), ( -1.0, delta + 1.0 ) ]

    return [ ( 6.0, delta ), ( -4.0, delta - 1.0 ), ( -4.0, delta + 1.0 ), 
             ( 1.0, delta - 2.0 ), ( 1.0, delta + 2.0 ) ]

# float
def _body( order, s, delta ):

    """
    int_1^inf sinc^order(eta/2) cos(delta eta) eta^(2s) d eta, term by term.
    Non-oscillating terms are integrated exactly; oscillating ones on
    geometric panels up to a cutoff chosen from the bound
    |int_X^inf cos(omega eta) eta^beta| <= 2 X^beta / |omega|.
    """

    beta = 2.0 * s - order
    scale = _headScale( order, s )

    value = 0.0
    oscillating = []
    for w, omega in _bodyTerms( order, abs( delta ) ):
        if abs( omega ) < 1e-12:
            value += w / ( -beta - 1.0 )

        else:
            oscillating.append( ( w, abs( omega ) ) )

    if not oscillating:
        return value

    bound = sum( 2.0 * abs( w ) / omega for w, omega in oscillating )
    cutoff = min( max( ( bound / ( TAIL_TARGET * scale ) ) ** ( 1.0 / -beta ), PANEL_RATIO ), XI_MAX )

    tail = bound * cutoff ** beta
    if tail > TAIL_LIMIT * scale:
        raise TailNotConvergedError( 
            'tail bound {:.3e} exceeds {:.0e} of the head at cutoff {:.3e} (s={!r}, lag {!r}).'.format( 
                tail, TAIL_LIMIT, cutoff, s, delta ) )

    edges = [ 1.0 ]
    while edges[-1] < cutoff:
        edges.append( min( edges[-1] * PANEL_RATIO, cutoff ) )

    LOGGER.debug( 'lag %r, s %r: cutoff %.3e on %d panels, tail bound %.3e', 
        delta, s, cutoff, len( edges ) - 1, tail )

    for w, omega in oscillating:
        for a, b in zip( edges[:-1], edges[1:] ):
            part, _ = _quad( lambda eta: eta ** beta, a, b, weight = 'cos', wvar = omega, 
                epsabs = 1e-13 * scale, epsrel = 1e-11 )
            value += w * part

    return value

# float
@functools.lru_cache( maxsize = 65536 )
def _lagValue( order, s, delta ):
    return ( _head( order, s, delta ) + _body( order, s, delta ) ) / np.pi

# np.ndarray
def lagValues( deltas, s, order ):

    """
    Lag integrals (1/pi) int_0^inf sinc^order(eta/2) cos(delta eta) eta^(2s)
    d eta, for order 4 (hats) or 2 (steps). Values are cached per rounded
    lag.

    @param deltas: Lags in units of the spacing
    @type deltas: np.ndarray

    @param s: Smoothness index
    @type s: float

    @param order: 2 or 4
    @type order: int

    @rtype: np.ndarray
    """

    if order not in ( 2, 4 ):
        raise ValidationError( 'lag order must be 2 or 4 (got {!r}).'.format( order ) )

    s = round( smoothnessValue( s ), 12 )
    deltas = np.round( np.abs( np.asarray( deltas, dtype = float ) ), LAG_DECIMALS )
    unique, inverse = np.unique( deltas, return_inverse = True )

    values = np.array([ _lagValue( order, s, float( d ) ) for d in unique ])
    return values[ inverse ].reshape( deltas.shape )

# float
def sobolevInner( phi, psi, s ):

    """
    Homogeneous Sobolev inner product
    int phi^(xi) conj(psi^(xi)) |xi|^(2s) d xi by frequency quadrature.
    With lags delta = (x_k - y_l) / h this is
    h^(1-2s) sum_kl c_k d_l m(delta_kl), where m is the lag integral.

    @param phi: First test function
    @type phi: sobolev.TestFunction

    @param psi: Second test function
    @type psi: sobolev.TestFunction

    @param s: Smoothness index, |s| < 1/2
    @type s: float or sobolev.SmoothnessIndex

    @rtype: float
    """

    s = smoothnessValue( s )
    phi, psi = _aligned( phi, psi )
    h = phi.spacing

    deltas = np.subtract.outer( phi.getCenters(), psi.getCenters() ) / h
    M = lagValues( deltas, s, phi.getOrder() )
    return float( h ** ( 1.0 - 2.0 * s ) * ( phi.coeffs @ M @ psi.coeffs ) )

# float
def sobolevNorm( phi, s ):
    return float( np.sqrt( max( sobolevInner( phi, phi, s ), 0.0 ) ) )

# np.ndarray
def _l2Lags( deltas, order ):
    d = np.abs( deltas )
    if order == 2:
        return np.maximum( 0.0, 1.0 - d )

    return np.where( d <= 1.0, 2.0 / 3.0 - d ** 2 + 0.5 * d ** 3, 
        np.where( d <= 2.0, ( 2.0 - np.minimum( d, 2.0 ) ) ** 3 / 6.0, 0.0 ) )

# float
def l2Inner( phi, psi ):

    """
    Closed-form L^2 inner product of test functions on aligned grids.

    @rtype: float
    """

    phi, psi = _commonGrid( phi, psi )
    n = len( phi.coeffs )
    lags = np.subtract.outer( np.arange( n ), np.arange( n ) ).astype( float )
    M = _l2Lags( lags, phi.getOrder() )
    return float( phi.spacing * ( phi.coeffs @ M @ psi.coeffs ) )

# float
def aHConstant( H ):

    """
    Normalization a_H = sin(pi H) Gamma(1 + 2H) of the isometry between
    the increment space and the Sobolev space of index 1/2 - H.

    @param H: Hurst index
    @type H: float

    @rtype: float
    """

    H = kernels.hurstValue( H )
    return float( np.sin( np.pi * H ) * special.gamma( 1.0 + 2.0 * H ) )

# float
def pairingConstant( n, H ):

    """
    Pairing constant -2^(n+2H-1) pi^(n/2) Gamma(n/2 + H) / Gamma(-H) of the
    n-dimensional kernel; a_H for n = 1.

    @rtype: float
    """

    n = int( n )
    if n < 1:
        raise ValidationError( 'dimension must be at least 1 (got {!r}).'.format( n ) )

    H = kernels.hurstValue( H )
    return float( -2.0 ** ( n + 2.0 * H - 1.0 ) * np.pi ** ( n / 2.0 ) \
        * special.gamma( n / 2.0 + H ) / special.gamma( -H ) )

# float
def _timeDomain( phi, psi, exponent, antiderivative ):

    """
    sum_kl c_k d_l h^(2-p) D^p G(x_k - y_l), where D^p is the central
    difference of order p with step h and G the antiderivative of the given
    order of |x|^exponent.
    """

    phi, psi = _aligned( phi, psi )
    h = phi.spacing
    p = phi.getOrder()

    denominator = np.prod([ exponent + i for i in range( 1, antiderivative + 1 ) ])
    deltas = np.subtract.outer( phi.getCenters(), psi.getCenters() )

    total = np.zeros_like( deltas )
    for j in range( p + 1 ):
        total += ( -1 ) ** j * special.comb( p, j ) \
            * kernels.power( deltas + ( p / 2.0 - j ) * h, exponent + antiderivative )

    return float( h ** ( 2.0 - p ) * ( phi.coeffs @ ( total / denominator ) @ psi.coeffs ) )

# tuple<float,float>
def pairingRoutes( phi1, phi2, H ):

    """
    Both sides of the pairing identity: the time-domain double integral of
    1/2 (|u|^2H + |v|^2H - |u - v|^2H) against phi1'(u) phi2'(v), in closed
    form for piecewise linear and piecewise constant functions, and
    a_H (phi1, phi2) in the Sobolev space of index 1/2 - H.

    @param phi1: First test function
    @type phi1: sobolev.TestFunction

    @param phi2: Second test function
    @type phi2: sobolev.TestFunction

    @param H: Hurst index
    @type H: float

    @return: Time-domain value and spectral value
    @rtype: tuple<float,float>
    """

    H = kernels.hurstValue( H )
    order = phi1.getOrder()

    timeDomain = 0.5 * _timeDomain( phi1, phi2, 2.0 * H, order - 2 )
    spectral = aHConstant( H ) * sobolevInner( phi1, phi2, 0.5 - H )

    LOGGER.debug( 'pairing at H=%r: time domain %.12e, spectral %.12e', H, timeDomain, spectral )
    return timeDomain, spectral

# float
def _discrepancy( first, second ):
    return abs( first - second ) / max( abs( second ), np.finfo( float ).eps )

# float
def pairingIdentityCheck( phi1, phi2, H ):

    """
    Relative discrepancy |route1 - route2| / max(|route2|, eps) of the two
    pairing routes.

    @rtype: float
    """

    return _discrepancy( *pairingRoutes( phi1, phi2, H ) )

# float
def rieszFourierConstant( n, alpha ):

    """
    Constant d_{n,alpha} = 2^(n/2 - alpha) Gamma((n - alpha)/2) / Gamma(alpha/2)
    of the Fourier transform of |x|^-alpha in dimension n.

    @param n: Dimension
    @type n: int

    @param alpha: Exponent in (0, n)
    @type alpha: float

    @rtype: float
    """

    n = int( n )
    if n < 1:
        raise ValidationError( 'dimension must be at least 1 (got {!r}).'.format( n ) )

    alpha = float( alpha )
    if not 0.0 < alpha < n:
        raise ValidationError( 'alpha must lie in the open interval (0, {}) (got {!r}).'.format( n, alpha ) )

    return float( 2.0 ** ( n / 2.0 - alpha ) * special.gamma( ( n - alpha ) / 2.0 ) \
        / special.gamma( alpha / 2.0 ) )

# tuple<float,float>
def rieszRoutes( phi, psi, alpha ):

    """
    int int |u - v|^-alpha phi(u) psi(v) du dv in the time domain and as
    (2 pi)^(1/2) d_{1,alpha} int |xi|^(alpha-1) phi^ conj(psi^) d xi.

    @param alpha: Exponent in (0, 1)
    @type alpha: float

    @rtype: tuple<float,float>
    """

    alpha = float( alpha )
    if not 0.0 < alpha < 1.0:
        raise ValidationError( 'alpha must lie in the open interval (0, 1) (got {!r}).'.format( alpha ) )

    timeDomain = _timeDomain( phi, psi, -alpha, phi.getOrder() )
    spectral = np.sqrt( 2.0 * np.pi ) * rieszFourierConstant( 1, alpha ) \
        * sobolevInner( phi, psi, 0.5 * ( alpha - 1.0 ) )

    return timeDomain, spectral

# float
def rieszIdentityCheck( phi, psi, alpha ):
    return _discrepancy( *rieszRoutes( phi, psi, alpha ) )

# np.ndarray
def indicatorTransformSquared( xi ):

    """
    |chi^(xi)|^2 = (1 - cos xi) / (pi xi^2) for the indicator of (0, 1),
    with the value 1/(2 pi) at the origin.

    @rtype: np.ndarray
    """

    xi = np.asarray( xi, dtype = float )
    return np.sinc( xi / ( 2.0 * np.pi ) ) ** 2 / ( 2.0 * np.pi )

# float
def rHSpectral( H ):

    """
    r_H = H |2H - 1| int |chi^(xi)|^2 |xi|^(2H-1) d xi, the full-line
    Sobolev norm of the indicator of (0, 1) in the space of index H - 1/2.
    The head is integrated with an algebraic weight, the tail with the
    Fourier rule on [1, inf).

    @param H: Hurst index
    @type H: float

    @rtype: float
    """

    H = kernels.hurstValue( H )
    if H == 0.5:
        return 0.0

    head, _ = _quad( lambda xi: 0.5 * np.sinc( xi / ( 2.0 * np.pi ) ) ** 2, 0.0, 1.0, 
        weight = 'alg', wvar = ( 2.0 * H - 1.0, 0.0 ), epsabs = 1e-14, epsrel = 1e-12 )
    oscillating, _ = _quad( lambda xi: xi ** ( 2.0 * H - 3.0 ), 1.0, np.inf, 
        weight = 'cos', wvar = 1.0, epsabs = 1e-14 )

    integral = head + 1.0 / ( 2.0 - 2.0 * H ) - oscillating
    return float( ( 2.0 / np.pi ) * H * abs( 2.0 * H - 1.0 ) * integral )

# np.ndarray
def stepGram( spacing, cells, s, route = 'spectral' ):

    """
    Gram matrix h^(1-2s) [m(i - j)] of consecutive uniform cell indicators
    in the Sobolev space of index s. The 'covariance' route uses the
    closed-form increment covariance of Hurst index 1/2 - s divided by
    a_H, which equals the spectral one.

    @param spacing: Cell length
    @type spacing: float

    @param cells: Number of cells
    @type cells: int

    @param s: Smoothness index
    @type s: float

    @param route: 'spectral' or 'covariance'
    @type route: str

    @rtype: np.ndarray
    """

    s = smoothnessValue( s )
    lags = np.arange( int( cells ), dtype = float )

    if route == 'spectral':
        values = lagValues( lags, s, 2 )

    elif route == 'covariance':
        H = 0.5 - s
        values = 0.5 * ( kernels.power( lags + 1, 2 * H ) + kernels.power( lags - 1, 2 * H ) \
            - 2.0 * kernels.power( lags, 2 * H ) ) / aHConstant( H )

    else:
        raise ValidationError( "route must be 'spectral' or 'covariance' (got {!r}).".format( route ) )

    return float( spacing ) ** ( 1.0 - 2.0 * s ) * linalg.toeplitz( values )

# np.ndarray
def indicatorGram( cells, H ):

    """
    a_H times the Sobolev Gram matrix, of index 1/2 - H, of the signed
    indicators of the given cells. It equals the covariance Gram of the
    increments over the same cells. Cell lengths must be in integer ratios.

    @param cells: Cells as (start, end) pairs or an increment basis
    @type cells: list<tuple<float,float>> or kernels.IncrementBasis

    @param H: Hurst index
    @type H: float

    @rtype: np.ndarray
    """

    H = kernels.hurstValue( H )
    if isinstance( cells, kernels.IncrementBasis ):
        cells = cells.getPairs()

    indicators = []
    for u, v in cells:
        sign = 1.0 if v > u else -1.0
        indicators.append( sign * TestFunction.indicator( min( u, v ), max( u, v ) ) )

    n = len( indicators )
    G = np.zeros( ( n, n ) )
    for i in range( n ):
        for j in range( i, n ):
            G[i, j] = G[j, i] = sobolevInner( indicators[i], indicators[j], 0.5 - H )

    return aHConstant( H ) * G

# float
def leadingConstant( H, cells = 63 ):

    """
    Leading constant of the angle asymptotics
    cos ~ C (eps / |t1 - t2|)^(2 - 2H) for windows (t - eps, t + eps)
    discretized into the given number of uniform cells:
    C = H |2H - 1| 2^(2 - 2H) l^T G^-1 l, where G is the indicator Gram of
    the cells of (0, 1) and l the cell lengths.

    @param H: Hurst index
    @type H: float

    @param cells: Cells per window
    @type cells: int

    @rtype: float
    """

    H = kernels.hurstValue( H )
    cells = int( cells )
    if cells < 1:
        raise ValidationError( 'cells must be at least 1 (got {!r}).'.format( cells ) )

    h = 1.0 / cells
    G = aHConstant( H ) * stepGram( h, cells, 0.5 - H )
    lengths = np.full( cells, h )

    quadratic = float( lengths @ linalg.cho_solve( linalg.cho_factor( G ), lengths ) )
    return H * abs( 2.0 * H - 1.0 ) * 2.0 ** ( 2.0 - 2.0 * H ) * quadratic

# np.ndarray
def _dualNorms( alpha, s, ks, T, spacing ):

    """
    sup over step functions f on (-T, 0) of |int f(x) (k - x)^-alpha dx|
    divided by the Sobolev norm of f, for every k. The Gram matrix is
    factored once.
    """

    cells = int( round( T / spacing ) )
    a = -T + spacing * np.arange( cells )
    b = a + spacing

    factor = linalg.cho_factor( stepGram( spacing, cells, s, route = 'covariance' ), 
        overwrite_a = True )

    values = []
    for k in ks:
        loads = ( ( k - b ) ** ( 1.0 - alpha ) - ( k - a ) ** ( 1.0 - alpha ) ) / ( alpha - 1.0 )
        values.append( np.sqrt( loads @ linalg.cho_solve( factor, loads ) ) )

    return np.array( values )

# ExponentFit
def dualNormDecayExponent( alpha, s, ks = ( 2.0, 4.0, 8.0 ), T = 64.0, spacing = 0.0625, 
        refinements = 1 ):

    """
    Decay of the dual Sobolev norm of |x - k|^-alpha restricted to the
    half-line (-inf, 0) as k grows, which scales as k^(1/2 + s - alpha).
    The half-line is truncated to (-T, 0) and discretized into uniform
    cells; the supremum is the quadratic form l^T M^-1 l. Every value is
    recomputed at 2T; while some of them moves by more than 1% T is doubled,
    at most refinements times. The fit is flagged as truncation dominated
    when the last doubling still moves a value by more than 1%.

    @param alpha: Exponent, alpha > 1/2 + s and alpha != 1
    @type alpha: float

    @param s: Smoothness index
    @type s: float

    @param ks: Distances, at least 2 and geometric
    @type ks: list<float>

    @param T: Truncation of the half-line
    @type T: float

    @param spacing: Cell length
    @type spacing: float

    @param refinements: Maximum number of extra doublings of T
    @type refinements: int

    @rtype: fitting.ExponentFit
    """

    s = smoothnessValue( s )
    alpha = float( alpha )
    ks = np.asarray( ks, dtype = float )

    if not alpha > 0.5 + s or alpha == 1.0:
        raise ValidationError( 'alpha must exceed 1/2 + s and differ from 1 (got {!r}).'.format( alpha ) )

    if len( ks ) < 2 or np.any( ks < 2.0 ):
        raise ValidationError( 'k values must be at least 2 (at least two of them).' )

    if T < 16.0 * spacing or not spacing > 0:
        raise ValidationError( 'T must cover at least 16 cells.' )

    T = float( T )
    values = _dualNorms( alpha, s, ks, T, spacing )
    rerun = _dualNorms( alpha, s, ks, 2.0 * T, spacing )
    change = float( np.max( np.abs( rerun - values ) / values ) )

    for _ in range( int( refinements ) ):
        if change <= 0.01:
            break

        LOGGER.debug( 'dual norm moves by %.2f%% at T=%r, doubling', 100.0 * change, T )
        T, values = 2.0 * T, rerun
        rerun = _dualNorms( alpha, s, ks, 2.0 * T, spacing )
        change = float( np.max( np.abs( rerun - values ) / values ) )

    state = State()
    if change > 0.01:
        state.setTruncationDominated()
        state.setMessage( 'doubling T={:g} moves the dual norm by {:.2%}'.format( T, change ) )
        warnings.warn( 'dual norm is truncation dominated ({:.2%} at 2T)'.format( change ), 
            TruncationWarning, stacklevel = 2 )

    fit = fitPowerLaw( ks, rerun, theory = 0.5 + s - alpha )
    fit.state = state
    fit.T = 2.0 * T

    LOGGER.info( 'dual norm decay at alpha=%r, s=%r: slope %.4f (theory %.4f)', 
        alpha, s, fit.slope, fit.theory )
    return fit
