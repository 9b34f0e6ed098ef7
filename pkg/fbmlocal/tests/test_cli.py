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

import io
import contextlib
import os
import json
import shutil
import tempfile
import unittest
from fbmlocal import cli, widgets

class RunTest( unittest.TestCase ):

    def setUp( self ):
        self.directory = tempfile.mkdtemp()

    def tearDown( self ):
        shutil.rmtree( self.directory )

    # tuple<int,str,str>
    def runCli( self, *argv ):
        stdout, stderr = io.StringIO(), io.StringIO()
        status = cli.run( list( argv ), stdout, stderr )
        return status, stdout.getvalue(), stderr.getvalue()

    # str
    def read( self, name ):
        with open( os.path.join( self.directory, name ), 'r' ) as stream:
            return stream.read()

    def testConstants( self ):
        status, out, err = self.runCli( 'constants', '--H', '0.5' )
        self.assertEqual( status, cli.SUCCESS )
        self.assertTrue( out.startswith( 'a_H = 1, r_H = 0' ) )
        self.assertEqual( err, '' )

    def testCov( self ):
        status, out, err = self.runCli( 'cov', '--H', '0.5', '--u', '1', '--v', '0.5' )
        self.assertEqual( status, cli.SUCCESS )
        self.assertTrue( out.startswith( 'cov(X_u, X_v) = 0.5' ) )

    def testInvalidHurst( self ):
        status, out, err = self.runCli( 'angle', '--H', '1.5' )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertIn( 'error: angle H:', err )
        self.assertEqual( out, '' )

    def testOverlappingWindows( self ):
        status, out, err = self.runCli( 'mi', '--t1', '0', '--t2', '0.2', '--eps', '0.125' )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertIn( 'error: mi eps:', err )

    def testUnknownFlag( self ):
        status, out, err = self.runCli( 'angle', '--hurst', '0.3' )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertTrue( err.startswith( 'error:' ) )

    def testUnknownCommand( self ):
        self.assertEqual( self.runCli( 'theorem' )[0], cli.VALIDATION_ERROR )

    def testMissingAlpha( self ):
        status, out, err = self.runCli( 'constants', '--s', '0.1' )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertTrue( err.startswith( 'error: constants:' ) )

    def testBrownianInformation( self ):
        status, out, err = self.runCli( 'mi', '--H', '0.5', '--t1', '0', '--t2', '1', '--eps', '0.125', 
            '--n', '32' )
        self.assertEqual( status, cli.SUCCESS )
        self.assertTrue( out.startswith( 'MI = ' ) )

        mi = float( out[ len( 'MI = ' ): ].split()[0] )
        self.assertLess( abs( mi ), 1e-10 )

    def testCsvOutput( self ):
        prefix = os.path.join( self.directory, 'run' )
        status, out, err = self.runCli( 'mi', '--H', '0.5', '--n', '16', '--out', prefix )
        self.assertEqual( status, cli.SUCCESS )

        lines = self.read( 'run.csv' ).split( '\n' )
        self.assertEqual( lines[0], '# command=mi' )
        self.assertIn( '# H=0.5', lines )
        self.assertIn( '# n=16', lines )
        self.assertFalse( os.path.exists( prefix + '.json' ) )

    def testBothFormats( self ):
        prefix = os.path.join( self.directory, 'run.csv' )
        status, out, err = self.runCli( 'angle', '--n', '16', '--format', 'both', '--out', prefix )
        self.assertEqual( status, cli.SUCCESS )

        data = json.loads( self.read( 'run.json' ) )
        self.assertEqual( data['name'], 'angle' )
        self.assertEqual( data['config']['H'], 0.75 )
        self.assertEqual( len( data['rows'] ), 1 )
        self.assertTrue( self.read( 'run.csv' ).startswith( '# command=angle\n' ) )

    def testConfigFile( self ):
        path = os.path.join( self.directory, 'run.conf' )
        with open( path, 'w' ) as stream:
            stream.write( '# shared settings\nH = 0.3\nn = 16\nformat = json\n' )

        prefix = os.path.join( self.directory, 'run' )
        status, out, err = self.runCli( 'angle', '--config', path, '--H', '0.6', '--out', prefix )
        self.assertEqual( status, cli.SUCCESS )

        config = json.loads( self.read( 'run.json' ) )['config']
        self.assertEqual( config['H'], 0.6 )
        self.assertEqual( config['n'], 16 )

    def testUnknownConfigKeys( self ):
        path = os.path.join( self.directory, 'typo.conf' )
        with open( path, 'w' ) as stream:
            stream.write( 'hurst = 0.3\nepsilon = 0.0625\n' )

        status, out, err = self.runCli( 'angle', '--config', path )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertIn( 'hurst', err )
        self.assertIn( 'epsilon', err )
        self.assertEqual( out, '' )

    def testMissingConfigFile( self ):
        status, out, err = self.runCli( 'angle', '--config', os.path.join( self.directory, 'none.conf' ) )
        self.assertEqual( status, cli.VALIDATION_ERROR )
        self.assertIn( 'can not be read', err )

    def testHelp( self ):
        with open( os.devnull, 'w' ) as devnull:
            stdout = io.StringIO()
            with contextlib.redirect_stdout( stdout ):
                status = cli.run([ '--help' ], devnull, devnull )

        self.assertEqual( status, cli.SUCCESS )
        self.assertIn( 'thm21', stdout.getvalue() )

class FormatTest( unittest.TestCase ):

    def testFormatNumber( self ):
        self.assertEqual( widgets.formatNumber( None ), '-' )
        self.assertEqual( widgets.formatNumber( True ), 'yes' )
        self.assertEqual( widgets.formatNumber( float( 'inf' ) ), 'inf' )
        self.assertEqual( widgets.formatNumber( 0.123456789 ), '0.123457' )
        self.assertEqual( widgets.formatNumber( 1.0, 12 ), '1' )

    def testFormatValue( self ):
        self.assertEqual( widgets.formatValue( None ), '' )
        self.assertEqual( widgets.formatValue( False ), 'false' )
        self.assertEqual( widgets.formatValue( 0.1 ), '0.1' )
        self.assertEqual( widgets.formatValue( float( '-inf' ) ), '-inf' )
        self.assertEqual( widgets.formatValue([ 0.5, 2 ]), '0.5;2' )

    def testPlainData( self ):
        self.assertEqual( widgets.plainData({ 'a': float( 'nan' ), 'b': [ float( 'inf' ), 1 ] }), 
            { 'a': None, 'b': [ 'inf', 1 ] } )

if __name__ == '__main__':
    unittest.main()
