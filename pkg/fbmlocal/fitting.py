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
from .state import State
from .exceptions import FitError

LOGGER = logging.getLogger( __name__ )

class ExponentFit( object ):

    """
    Log-log least squares fit log y = intercept + slope log x, compared
    with a theoretical exponent.
    """

    # void
    def __init__( self, slope, intercept, r2, theory, x, y, correction_order = None, \
                  state = None ):

        """
        Log-log least squares fit.

        @param slope: Fitted slope
        @type slope: float

        @param intercept: Fitted intercept (of the natural logarithms)
        @type intercept: float

        @param r2: Coefficient of determination in [0, 1]
        @type r2: float

        @param theory: Theoretical slope
        @type theory: float

        @param x: Abscissae used by the fit
        @type x: np.ndarray

        @param y: Ordinates used by the fit
        @type y: np.ndarray

        @param correction_order: Expected relative order of the first
            correction term, in powers of x
        @type correction_order: float

        @param state: Quality state
        @type state: state.State
        """

        self.slope = float( slope )
        self.intercept = float( intercept )
        self.r2 = float( min( max( r2, 0.0 ), 1.0 ) )
        self.theory = float( theory ) if theory is not None else None
        self.gap = abs( self.slope - self.theory ) if self.theory is not None else None
        self.x = np.asarray( x, dtype = float )
        self.y = np.asarray( y, dtype = float )
        self.correction_order = correction_order
        self.state = state or State()

    # tuple<float,float>
    def getWindow( self ):

        """
        Returns the fit window (smallest and largest abscissa).

        @rtype: tuple<float,float>
        """

        return float( self.x.min() ), float( self.x.max() )

    # dict
    def getData( self ):

        """
        Returns the fit as a serializable dictionary.

        @rtype: dict
        """

        low, high = self.getWindow()
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r2': self.r2,
            'theory_slope': self.theory,
            'theory_gap': self.gap,
            'correction_order': self.correction_order,
            'window': [ low, high ],
            'points': int( len( self.x ) )
        }

# ExponentFit
def fitPowerLaw( x, y, theory = None, correction_order = None, min_points = 2 ):

    """
    Least squares fit of log(y) against log(x).

    @param x: Positive abscissae
    @type x: list<float>

    @param y: Positive ordinates
    @type y: list<float>

    @param theory: Theoretical slope
    @type theory: float

    @param correction_order: Expected relative order of the correction
    @type correction_order: float

    @param min_points: Minimal number of points
    @type min_points: int

    @rtype: fitting.ExponentFit
    """

    x = np.asarray( x, dtype = float )
    y = np.asarray( y, dtype = float )

    if len( x ) != len( y ) or len( x ) < min_points:
        raise FitError( 'fit needs at least {} points (got {}).'.format( min_points, len( x ) ) )

    if not ( np.all( np.isfinite( x ) ) and np.all( np.isfinite( y ) ) ):
        raise FitError( 'fit needs finite values.' )

    if np.any( x <= 0 ) or np.any( y <= 0 ):
        raise FitError( 'log-log fit needs strictly positive values.' )

    lx, ly = np.log( x ), np.log( y )
    slope, intercept = np.polyfit( lx, ly, 1 )

    residual = ly - ( intercept + slope * lx )
    total = np.sum( ( ly - ly.mean() ) ** 2 )
    r2 = 1.0 - np.sum( residual ** 2 ) / total if total > 0 else 1.0

    LOGGER.debug( 'power law fit: slope %.6f (theory %s), r2 %.6f', slope, theory, r2 )
    return ExponentFit( slope, intercept, r2, theory, x, y, correction_order )
