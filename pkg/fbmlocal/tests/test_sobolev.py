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

import math, unittest, warnings
import numpy as np
from scipy import special
from fbmlocal import kernels, sobolev
from fbmlocal.sobolev import TestFunction
from fbmlocal.exceptions import ValidationError, TruncationWarning

# float
def closedFormRH( H ):
    beta = 2.0 - 2.0 * H
    integral = -special.gamma( -beta ) * np.cos( np.pi * beta / 2.0 )
    return ( 2.0 / np.pi ) * H * abs( 2.0 * H - 1.0 ) * integral

class TestFunctionTest( unittest.TestCase ):

    def testHat( self ):
        phi = TestFunction.hat( 0.0, 1.0 )
        self.assertEqual( phi.getSupport(), ( 0.0, 1.0 ) )
        np.testing.assert_allclose( phi.evaluate([ 0.0, 0.25, 0.5, 1.0 ]), [ 0.0, 0.5, 1.0, 0.0 ], atol = 1e-15 )

    def testSteps( self ):
        phi = TestFunction.steps( 0.0, 1.0, [ 1.0, -2.0 ] )
        np.testing.assert_allclose( phi.evaluate([ -0.1, 0.2, 0.7, 1.2 ]), [ 0.0, 1.0, -2.0, 0.0 ] )

    def testRefine( self ):
        x = np.linspace( -0.5, 2.5, 61 )
        for phi in ( TestFunction.hats( 0.0, 2.0, [ 1.0, -0.5, 2.0 ] ), TestFunction.steps( 0.0, 1.0, [ 3.0, 1.0 ] ) ):
            np.testing.assert_allclose( phi.refine( 3 ).evaluate( x ), phi.evaluate( x ), atol = 1e-12 )

    def testAddOnCommonGrid( self ):
        total = TestFunction.indicator( 0.0, 1.0 ) + TestFunction.indicator( 1.0, 2.0 )
        np.testing.assert_allclose( total.evaluate([ 0.5, 1.5, 2.5 ]), [ 1.0, 1.0, 0.0 ] )

    def testTransformAtOrigin( self ):
        phi = TestFunction.hat( 0.0, 1.0 )
        self.assertAlmostEqual( complex( phi.transform( 0.0 ) ).real, 0.5 / np.sqrt( 2.0 * np.pi ), places = 14 )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            TestFunction( 'spline', 0.0, 1.0, [ 1.0 ] )

        with self.assertRaises( ValidationError ):
            TestFunction.hat( 1.0, 1.0 )

        with self.assertRaises( ValidationError ):
            TestFunction.hat( 0.0, 1.0 ).dilate( 0.0 )

        with self.assertRaises( ValidationError ):
            sobolev.l2Inner( TestFunction.hat( 0.0, 1.0 ), TestFunction.indicator( 0.0, 1.0 ) )

        with self.assertRaises( ValidationError ):
            sobolev.l2Inner( TestFunction.indicator( 0.0, 1.0 ), TestFunction.indicator( 0.3, 1.3 ) )

class SobolevInnerTest( unittest.TestCase ):

    def testSmoothnessRange( self ):
        for s in ( 0.5, -0.5, 0.7 ):
            with self.assertRaises( ValidationError ):
                sobolev.smoothnessValue( s )

    def testL2Closed( self ):
        self.assertAlmostEqual( sobolev.l2Inner( TestFunction.hat( 0.0, 1.0 ), TestFunction.hat( 0.0, 1.0 ) ), 
            1.0 / 3.0, places = 14 )
        self.assertAlmostEqual( sobolev.l2Inner( TestFunction.indicator( 0.0, 1.0 ), 
            TestFunction.indicator( 0.5, 1.5, cells = 2 ) ), 0.5, places = 14 )

    def testPlancherel( self ):
        pairs = [
            ( TestFunction.hat( 0.0, 1.0 ), TestFunction.hat( 0.5, 1.5 ) ),
            ( TestFunction.indicator( 0.0, 1.0 ), TestFunction.indicator( 0.0, 1.0 ) ),
            ( TestFunction.steps( 0.0, 1.0, [ 1.0, 2.0 ] ), TestFunction.indicator( 0.5, 1.0 ) )
        ]
        for phi, psi in pairs:
            self.assertAlmostEqual( sobolev.sobolevInner( phi, psi, 0.0 ), sobolev.l2Inner( phi, psi ), places = 7 )

    def testBrownianStepGram( self ):
        np.testing.assert_allclose( sobolev.stepGram( 0.5, 4, 0.0 ), 0.5 * np.eye( 4 ), atol = 1e-9 )

    def testStepGramRoutes( self ):
        for s in ( -0.25, 0.25 ):
            np.testing.assert_allclose( sobolev.stepGram( 0.25, 4, s ), 
                sobolev.stepGram( 0.25, 4, s, route = 'covariance' ), rtol = 1e-6, atol = 1e-9 )

        with self.assertRaises( ValidationError ):
            sobolev.stepGram( 0.25, 4, 0.0, route = 'time' )

    def testDilation( self ):
        phi = TestFunction.hats( 0.0, 1.0, [ 1.0, 2.0, 1.0 ] )
        psi = TestFunction.hat( 1.0, 2.0 )
        s, k = 0.3, 4.0
        self.assertAlmostEqual( 
            sobolev.sobolevInner( phi.dilate( k ), psi.dilate( k ), s ), 
            k ** ( 2.0 * s - 1.0 ) * sobolev.sobolevInner( phi, psi, s ), 
            places = 10 
        )

    def testNormIsPositive( self ):
        self.assertGreater( sobolev.sobolevNorm( TestFunction.hat( 0.0, 1.0 ), -0.3 ), 0.0 )

class InnerProductPropertyTest( unittest.TestCase ):

    def setUp( self ):
        self.rng = np.random.Generator( np.random.Philox( 5 ) )

    # tuple<TestFunction,TestFunction,TestFunction>
    def triple( self, kind ):
        if kind == TestFunction.HAT:
            return tuple( TestFunction.hats( a, a + 1.0, self.rng.standard_normal( 3 ) ) for a in ( 0.0, 0.5, -1.25 ) )

        return tuple( TestFunction.steps( a, a + 1.0, self.rng.standard_normal( 4 ) ) for a in ( 0.0, 0.5, -1.25 ) )

    def testBilinearAndSymmetric( self ):
        for kind in TestFunction.KINDS:
            for s in ( -0.3, 0.0, 0.2 ):
                for _ in range( 5 ):
                    phi, chi, psi = self.triple( kind )
                    a, b = self.rng.uniform( -2.0, 2.0, size = 2 )

                    left = sobolev.sobolevInner( a * phi + b * chi, psi, s )
                    right = a * sobolev.sobolevInner( phi, psi, s ) + b * sobolev.sobolevInner( chi, psi, s )
                    self.assertLess( abs( left - right ), 1e-10 * max( 1.0, abs( right ) ) )

                    first, second = sobolev.sobolevInner( phi, psi, s ), sobolev.sobolevInner( psi, phi, s )
                    self.assertLess( abs( first - second ), 1e-10 * max( 1.0, abs( first ) ) )

    def testCauchySchwarz( self ):
        for kind in TestFunction.KINDS:
            for s in ( -0.4, 0.0, 0.3 ):
                for _ in range( 5 ):
                    phi, psi, _ = self.triple( kind )
                    bound = sobolev.sobolevNorm( phi, s ) * sobolev.sobolevNorm( psi, s )
                    self.assertLessEqual( abs( sobolev.sobolevInner( phi, psi, s ) ), bound * ( 1.0 + 1e-10 ) )

class IndicatorTransformTest( unittest.TestCase ):

    def testClosedForm( self ):
        xi = np.array([ -7.5, -1.0, 0.3, 2.0, 40.0 ])
        np.testing.assert_allclose( sobolev.indicatorTransformSquared( xi ), 
            ( 1.0 - np.cos( xi ) ) / ( np.pi * xi ** 2 ), rtol = 1e-12 )

    def testOrigin( self ):
        self.assertAlmostEqual( float( sobolev.indicatorTransformSquared( 0.0 ) ), 1.0 / ( 2.0 * np.pi ), places = 15 )
        self.assertAlmostEqual( float( sobolev.indicatorTransformSquared( 1e-6 ) ), 1.0 / ( 2.0 * np.pi ), places = 12 )

    def testMatchesTestFunction( self ):
        xi = np.linspace( -20.0, 20.0, 41 )
        transform = TestFunction.indicator( 0.0, 1.0 ).transform( xi )
        np.testing.assert_allclose( np.abs( transform ) ** 2, sobolev.indicatorTransformSquared( xi ), 
            rtol = 1e-12, atol = 1e-16 )

class ConstantTest( unittest.TestCase ):

    def testAH( self ):
        self.assertAlmostEqual( sobolev.aHConstant( 0.5 ), 1.0, places = 15 )
        for H in ( 0.2, 0.4, 0.75 ):
            self.assertAlmostEqual( sobolev.pairingConstant( 1, H ), sobolev.aHConstant( H ), places = 12 )

    def testRH( self ):
        self.assertEqual( sobolev.rHSpectral( 0.5 ), 0.0 )
        self.assertAlmostEqual( sobolev.rHSpectral( 0.75 ), 0.59841, places = 4 )
        for H in ( 0.25, 0.75, 0.9 ):
            self.assertAlmostEqual( sobolev.rHSpectral( H ), closedFormRH( H ), places = 6 )
            self.assertGreater( sobolev.rHSpectral( H ), 0.0 )

    def testRieszConstant( self ):
        self.assertAlmostEqual( sobolev.rieszFourierConstant( 1, 0.5 ), 1.0, places = 14 )
        self.assertAlmostEqual( sobolev.rieszFourierConstant( 2, 1.0 ), 1.0, places = 14 )
        self.assertAlmostEqual( sobolev.rieszFourierConstant( 3, 1.0 ), np.sqrt( 2.0 / np.pi ), places = 14 )
        self.assertAlmostEqual( sobolev.rieszFourierConstant( 3, 2.0 ), np.sqrt( np.pi / 2.0 ), places = 14 )

        with self.assertRaises( ValidationError ):
            sobolev.rieszFourierConstant( 1, 1.0 )

        with self.assertRaises( ValidationError ):
            sobolev.rieszFourierConstant( 0, 0.5 )

        with self.assertRaises( ValidationError ):
            sobolev.rieszRoutes( TestFunction.hat( 0.0, 1.0 ), TestFunction.hat( 0.0, 1.0 ), 1.5 )

    def testGamma( self ):
        self.assertAlmostEqual( special.gamma( 0.5 ), np.sqrt( np.pi ), places = 14 )
        for n in range( 8 ):
            self.assertAlmostEqual( special.gamma( n + 1.0 ) / math.factorial( n ), 1.0, places = 13 )

class IdentityTest( unittest.TestCase ):

    def testPairing( self ):
        pairs = [
            ( TestFunction.hat( 0.0, 1.0 ), TestFunction.hat( 0.0, 1.0 ) ),
            ( TestFunction.hat( 0.0, 1.0 ), TestFunction.hat( 2.0, 3.0 ) ),
            ( TestFunction.indicator( 0.0, 1.0 ), TestFunction.indicator( 2.0, 3.0 ) )
        ]
        for H in ( 0.25, 0.75 ):
            for phi1, phi2 in pairs:
                self.assertLess( sobolev.pairingIdentityCheck( phi1, phi2, H ), 1e-3 )

    def testRiesz( self ):
        self.assertLess( sobolev.rieszIdentityCheck( TestFunction.indicator( 0.0, 1.0 ), 
            TestFunction.indicator( 2.0, 3.0 ), 0.5 ), 1e-3 )

    def testIndicatorGramIsCovariance( self ):
        basis = kernels.IncrementBasis.fromPairs([ ( 0.0, 1.0 ), ( 2.0, 3.0 ) ])
        for H in ( 0.3, 0.75 ):
            np.testing.assert_allclose( sobolev.indicatorGram( basis, H ), kernels.gram( basis, H ), rtol = 1e-5 )

class DualNormTest( unittest.TestCase ):

    def testDecay( self ):
        with warnings.catch_warnings():
            warnings.simplefilter( 'ignore' )
            fit = sobolev.dualNormDecayExponent( 1.5, 0.0 )

        self.assertEqual( fit.theory, -1.0 )
        self.assertLess( abs( fit.slope - fit.theory ), 0.05 )

    def testRefinedPairs( self ):
        for alpha, s in ( ( 2.0, 0.25 ), ( 1.5, -0.25 ) ):
            with warnings.catch_warnings():
                warnings.simplefilter( 'error', TruncationWarning )
                fit = sobolev.dualNormDecayExponent( alpha, s )

            self.assertFalse( fit.state.isTruncationDominated() )
            self.assertAlmostEqual( fit.theory, 0.5 + s - alpha )
            self.assertLess( abs( fit.slope - fit.theory ), 0.05 )

    def testTruncationDominated( self ):
        with warnings.catch_warnings( record = True ) as caught:
            warnings.simplefilter( 'always' )
            fit = sobolev.dualNormDecayExponent( 2.0, 0.25, T = 1.0, refinements = 0 )

        self.assertTrue( fit.state.isTruncationDominated() )
        self.assertIn( 'T=1', fit.state.getMessage() )
        self.assertEqual( fit.T, 2.0 )
        self.assertTrue( any( issubclass( w.category, TruncationWarning ) for w in caught ) )

    def testRefinementDoublesT( self ):
        with warnings.catch_warnings():
            warnings.simplefilter( 'ignore' )
            fit = sobolev.dualNormDecayExponent( 2.0, 0.25, T = 1.0, refinements = 2 )

        self.assertEqual( fit.T, 8.0 )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            sobolev.dualNormDecayExponent( 0.4, 0.0 )

        with self.assertRaises( ValidationError ):
            sobolev.dualNormDecayExponent( 1.0, 0.0 )

        with self.assertRaises( ValidationError ):
            sobolev.dualNormDecayExponent( 1.5, 0.0, ks = ( 1.0, 2.0 ) )

if __name__ == '__main__':
    unittest.main()
