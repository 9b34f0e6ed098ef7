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

import unittest, warnings
import numpy as np
from fbmlocal import lab
from fbmlocal.exceptions import FitError, ValidationError

SHORT_EPS = ( 0.25, 0.125, 0.0625 )

class ScanConfigTest( unittest.TestCase ):

    def testData( self ):
        cfg = lab.ScanConfig( 0.75, 0.0, 2.0, SHORT_EPS, 8 )
        self.assertEqual( cfg.getData()['n'], 8 )
        self.assertEqual( cfg.getData()['eps'], list( SHORT_EPS ) )
        self.assertEqual( len( cfg.getWindow( 0.0, 0.25 ) ), 7 )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            lab.ScanConfig( 0.75, 1.0, 1.0, SHORT_EPS )

        with self.assertRaises( ValidationError ):
            lab.ScanConfig( 0.75, 0.0, 1.0, ( 0.5, 0.25 ) )

        with self.assertRaises( ValidationError ):
            lab.ScanConfig( 0.75, 0.0, 1.0, ( 0.125, 0.25 ) )

        with self.assertRaises( ValidationError ):
            lab.ScanConfig( 0.75, 0.0, 1.0, SHORT_EPS, grid_n = 3 )

        with self.assertRaises( ValidationError ):
            lab.ScanConfig( 1.0, 0.0, 1.0, SHORT_EPS )

class ScanTest( unittest.TestCase ):

    def testRowsShrinkWithEps( self ):
        table = lab.localIndependenceScan( lab.ScanConfig( 0.75, 0.0, 1.0, SHORT_EPS, 8 ) )
        self.assertEqual( len( table ), 3 )

        eps = table.getColumn( 'eps' )
        self.assertEqual( eps.tolist(), list( SHORT_EPS ) )

        cos = table.getColumn( 'cos' )
        self.assertTrue( np.all( np.diff( cos ) < 0 ) )
        self.assertTrue( np.all( table.getColumn( 'hs_lower' ) <= table.getColumn( 'mi' ) ) )
        self.assertTrue( np.all( table.getColumn( 'mi' ) <= table.getColumn( 'hs_upper' ) ) )

        record = table.getRecords()[0]
        self.assertEqual( record['eps'], 0.25 )
        self.assertEqual( record['size_a'], 7 )
        self.assertFalse( record['skipped'] )

    def testThreadsGiveSameRows( self ):
        cfg = lab.ScanConfig( 0.3, 0.0, 1.0, SHORT_EPS, 8 )
        threaded = lab.ScanConfig( 0.3, 0.0, 1.0, SHORT_EPS, 8, threads = 3 )
        np.testing.assert_allclose( lab.localIndependenceScan( cfg ).getColumn( 'cos' ), 
            lab.localIndependenceScan( threaded ).getColumn( 'cos' ), rtol = 1e-12 )

    def testBrownian( self ):
        table = lab.localIndependenceScan( lab.ScanConfig( 0.5, 0.0, 1.0, SHORT_EPS, 8 ) )
        self.assertLess( np.max( table.getColumn( 'cos' ) ), 1e-10 )
        self.assertLess( np.max( table.getColumn( 'mi' ) ), 1e-18 )

    def testSelfSimilarity( self ):
        base = lab.localIndependenceScan( lab.ScanConfig( 0.7, 0.0, 1.0, SHORT_EPS, 8 ) )
        scaled = lab.localIndependenceScan( lab.ScanConfig( 0.7, 0.0, 2.0, 
            tuple( 2.0 * e for e in SHORT_EPS ), 8 ) )
        np.testing.assert_allclose( scaled.getColumn( 'cos' ), base.getColumn( 'cos' ), rtol = 1e-9 )

    def testUnknownColumn( self ):
        table = lab.localIndependenceScan( lab.ScanConfig( 0.75, 0.0, 1.0, SHORT_EPS, 8 ) )
        with self.assertRaises( ValidationError ):
            table.getRows()[0].getValue( 'angle' )

        with self.assertRaises( ValidationError ):
            lab.fitExponent( table, 'angle', 0.5 )

        with self.assertRaises( FitError ):
            lab.fitExponent( table, 'cos', 0.5 )

class AngleRateTest( unittest.TestCase ):

    def testRates( self ):
        report = lab.angleRateCheck( 0.75, grid_n = 16 )
        self.assertEqual( report.name, 'thm21' )
        self.assertLess( abs( report.getFit( 'cos' ).slope - 0.5 ), 0.1 )
        self.assertLess( abs( report.getFit( 'mi' ).slope - 1.0 ), 0.15 )
        self.assertLess( abs( report.getValue( 'mi_ratio' ) - 1.0 ), 0.05 )
        self.assertGreater( report.getValue( 'r_h_spectral' ), 0.0 )

        self.assertLessEqual( report.getValue( 'leading_constant' ),
            report.getValue( 'constant_bound' ) * ( 1.0 + 1e-9 ) )
        self.assertAlmostEqual( report.getValue( 'spectral_bound_ratio' ),
            report.getValue( 'r_h_extrapolated' ) / report.getValue( 'constant_bound' ), places = 12 )
        self.assertLess( report.getValue( 'spectral_bound_ratio' ), 1.05 )
        self.assertAlmostEqual( report.getValue( 'spectral_gap' ),
            abs( report.getValue( 'r_h_extrapolated' ) / report.getValue( 'r_h_spectral' ) - 1.0 ), places = 12 )

        data = report.getData()
        self.assertEqual( sorted( data ), [ 'config', 'fits', 'name', 'rows', 'state', 'values' ] )
        self.assertEqual( len( data['rows'] ), len( lab.DEFAULT_EPS ) )

    def testBrownianHasNoFits( self ):
        report = lab.angleRateCheck( 0.5, grid_n = 8 )
        self.assertEqual( report.fits, {} )
        self.assertIsNotNone( report.state.getMessage() )

class PastRateTest( unittest.TestCase ):

    def testRates( self ):
        for H in ( 0.25, 0.75 ):
            with warnings.catch_warnings():
                warnings.simplefilter( 'ignore' )
                report = lab.pastRateCheck( H )

            self.assertEqual( report.name, 'thm22' )
            self.assertEqual( report.getFit( 'cos' ).theory, 1.0 - H )
            self.assertLess( abs( report.getFit( 'cos' ).slope - ( 1.0 - H ) ), 0.05 )
            self.assertLess( abs( report.getFit( 'mi' ).slope - ( 2.0 - 2.0 * H ) ), 0.10 )
            self.assertLessEqual( report.getValue( 'slope_shift_2T' ), lab.SLOPE_SHIFT_LIMIT )

    def testBrownianVanishes( self ):
        report = lab.pastRateCheck( 0.5 )
        self.assertEqual( report.fits, {} )
        self.assertLess( np.nanmax( np.abs( report.table.getColumn( 'mi' ) ) ), 1e-10 )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            lab.pastRateCheck( 0.75, t = 1.0, T = 8.0 )

        with self.assertRaises( ValidationError ):
            lab.pastRateCheck( 0.75, t = 0.1, eps = ( 0.125, 0.0625 ) )

class AdjacencyTest( unittest.TestCase ):

    def testDivergence( self ):
        report = lab.adjacencyDivergence( 0.75, sizes = ( 5, 9, 17, 33 ) )
        self.assertTrue( report.getValue( 'increasing' ) )
        self.assertTrue( report.getValue( 'nested' ) )
        self.assertTrue( report.getValue( 'nondecreasing' ) )
        self.assertTrue( report.getValue( 'eps_invariant' ) )
        self.assertEqual( len( report.getValue( 'growth' ) ), 3 )

    def testBrownian( self ):
        report = lab.adjacencyDivergence( 0.5, sizes = ( 5, 9 ), check_invariance = False )
        self.assertLess( max( report.getValue( 'mi' ) ), 1e-18 )
        self.assertNotIn( 'eps_invariant', report.values )

    def testDefaultSizesAreNested( self ):
        self.assertEqual( lab.DEFAULT_SIZES[:3], ( 5, 9, 17 ) )
        self.assertTrue( lab._nested( lab.DEFAULT_SIZES ) )
        self.assertFalse( lab._nested( ( 4, 8, 16 ) ) )

    def testRefinementIsNondecreasing( self ):
        for H in ( 0.3, 0.8 ):
            report = lab.adjacencyDivergence( H, sizes = ( 3, 5, 9, 17 ), check_invariance = False )
            mi = report.getValue( 'mi' )
            self.assertTrue( report.getValue( 'nondecreasing' ) )
            self.assertTrue( all( b >= a for a, b in zip( mi[:-1], mi[1:] ) ) )

    def testNondecreasing( self ):
        self.assertTrue( lab._nondecreasing([ 0.1, 0.2, 0.2, float( 'inf' ) ]) )
        self.assertFalse( lab._nondecreasing([ 0.1, 0.3, 0.2 ]) )
        self.assertFalse( lab._nondecreasing([ 0.1, float( 'inf' ), 5.0 ]) )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            lab.adjacencyDivergence( 0.75, sizes = ( 8, 4 ) )

        with self.assertRaises( ValidationError ):
            lab.adjacencyDivergence( 0.75, eps = 0.0 )

class PastFutureTest( unittest.TestCase ):

    def testAngle( self ):
        cos = lab.pastFutureAngle( 0.75, T = 16.0, n = 16 )
        self.assertGreater( cos, 0.0 )
        self.assertLess( cos, 1.0 )
        self.assertLess( lab.pastFutureAngle( 0.5, T = 16.0, n = 16 ), 1e-8 )

    def testTruncationScaleFree( self ):
        with warnings.catch_warnings():
            warnings.simplefilter( 'ignore' )
            report = lab.pastFutureStability( 0.75, T = 16.0, n = 16 )

        self.assertLess( report.getValue( 'drift_T' ), 1e-9 )
        self.assertAlmostEqual( report.getValue( 'margin' ), 1.0 - report.getValue( 'cos' ), places = 15 )

class ComplementTest( unittest.TestCase ):

    def testRates( self ):
        for H in ( 0.25, 0.75 ):
            with warnings.catch_warnings():
                warnings.simplefilter( 'ignore' )
                report = lab.complementWindowScan( H )

            self.assertEqual( report.name, 'complement' )
            self.assertLess( abs( report.getFit( 'hs' ).slope - ( 1.0 - H ) ), 0.05 )
            self.assertLess( abs( report.getFit( 'mi' ).slope - ( 2.0 - 2.0 * H ) ), 0.10 )
            self.assertIn( 'slope_shift_2T', report.values )

    def testBrownianVanishes( self ):
        report = lab.complementWindowScan( 0.5, eps = SHORT_EPS )
        self.assertEqual( report.fits, {} )
        self.assertLess( np.nanmax( np.abs( report.table.getColumn( 'cos' ) ) ), 1e-10 )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            lab.complementWindowScan( 0.75, t1 = 0.0, t = 0.2, t2 = 1.0, eps = ( 0.25, 0.125 ) )

        with self.assertRaises( ValidationError ):
            lab.complementWindowScan( 0.75, t1 = 0.0, t = 0.5, t2 = 1.0, eps = SHORT_EPS, T = 1.0 )

class LevyTest( unittest.TestCase ):

    def testLattice( self ):
        offsets = lab.ballLattice( 5 )
        self.assertEqual( offsets.shape, ( 8, 2 ) )
        self.assertTrue( np.all( np.hypot( offsets[:, 0], offsets[:, 1] ) < 1.0 ) )

        for grid in ( 3, 4 ):
            with self.assertRaises( ValidationError ):
                lab.ballLattice( grid )

    def testRate( self ):
        report = lab.levyBallScan( 0.75, grid = 5 )
        self.assertEqual( report.config['points'], 8 )
        self.assertLess( abs( report.getFit( 'cos' ).slope - 0.5 ), 0.15 )

    def testOverlap( self ):
        with self.assertRaises( ValidationError ):
            lab.levyBallScan( 0.75, c2 = ( 0.5, 0.0 ), eps = ( 0.3, 0.1 ) )

class HalflineTest( unittest.TestCase ):

    def testGrowth( self ):
        report = lab.halflineDivergence( 0.75, Ts = ( 4.0, 8.0, 16.0 ), cells_per_octave = 2 )
        self.assertTrue( report.getValue( 'nondecreasing' ) )
        self.assertTrue( report.getValue( 'increasing' ) )
        self.assertEqual( report.table.getColumn( 'T' ).tolist(), [ 4.0, 8.0, 16.0 ] )

    def testInvalid( self ):
        with self.assertRaises( ValidationError ):
            lab.halflineDivergence( 0.75, eps = 1.0, Ts = ( 1.5, 8.0 ) )

if __name__ == '__main__':
    unittest.main()
